"""The documented command lines whose output is pinned byte for byte."""
import re
from pathlib import Path

HERE = Path(__file__).parent
DATA = HERE / "data"
GOLDEN = HERE / "golden"

# a decimal point or exponent in a numeric token
FLOAT = re.compile(rb"(?<![\w/\"])-?\d+\.\d+|\d[eE][+-]?\d")

# (golden file stem, argv, expected exit code)
CASES = [
    ("germ_cusp", ["germ", "analyze", "y^2 - x^3"], 0),
    ("germ_nonisolated", ["germ", "analyze", "x^2*y^2"], 1),
    ("strata_k3", ["strata", "expdim", "--surface", "k3", "--g", "4", "--kappa", "2"], 0),
    ("strata_hirzebruch", ["strata", "expdim", "--surface", "hirzebruch", "--n", "1",
                           "--a", "2", "--b", "3"], 0),
    ("family_scan", ["family", "scan", "--spec", str(DATA / "family.json"),
                     "--samples", "1,1/2,0"], 0),
    ("family_stratify", ["family", "stratify", "--a", "-3/4", "--b", "1/4"], 0),
    ("defmap_rank", ["defmap", "rank", "--spec", str(DATA / "defmap.json")], 0),
    ("defmap_realize", ["defmap", "realize", "--spec", str(DATA / "defmap.json"),
                        "--target", "1,0,1"], 0),
    ("tropical_count", ["tropical", "count", "--d", "2", "--delta", "1",
                        "--algorithm", "both"], 0),
    ("tropical_contract_csv", ["--format", "csv", "tropical", "contract",
                               "--curve", str(DATA / "cubic.json"), "--edges", "e0,e1"], 0),
]
