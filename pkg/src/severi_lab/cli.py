"""``severi-lab`` command line.

Data goes to standard output as JSON or CSV; log messages go to standard
error.  Exit status: 0 on success, 1 on a domain error (reported as a JSON
object with an ``error`` field), 2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import logging
import re
import sys
from fractions import Fraction
from pathlib import Path

from . import defmap, germ, hyperelliptic, strata
from .emit import UnsupportedFormat, emit
from .poly import PolynomialSyntaxError, ZeroPolynomial, to_fraction
from .tropical import curve as tcurve
from .tropical import floor, lattice_paths

log = logging.getLogger("severi_lab")


class DomainError(Exception):
    """Wraps a library exception for the exit-1 path."""

    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind


DOMAIN_ERRORS = (
    germ.GermError, PolynomialSyntaxError, ZeroPolynomial,
    defmap.ShapeMismatch, defmap.Unrealizable, defmap.UnsupportedBudget,
    strata.InvalidSpec, lattice_paths.OutOfRange, lattice_paths.RealizationError,
    tcurve.InvalidEdge, tcurve.CurveFormatError, tcurve.NonPositiveValuation,
    hyperelliptic.StratificationMismatch,
)


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let values such as -3/4 through as arguments rather than flags
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$")

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def _rational(text: str) -> Fraction:
    try:
        return to_fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from exc


def _rational_list(text: str) -> list[Fraction]:
    if not text.strip():
        return []
    return [_rational(t.strip()) for t in text.split(",")]


def _load_json(path: str):
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise DomainError("InputError", f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise DomainError("InputError", f"{path} is not valid JSON: {exc}") from None


# -- handlers ------------------------------------------------------------------

def cmd_germ_analyze(args) -> dict:
    log.info("analysing germ %s", args.poly)
    return germ.classify(args.poly).as_dict()


def cmd_family_scan(args) -> dict:
    spec = _load_json(args.spec)
    if not isinstance(spec, dict) or not isinstance(spec.get("coeffs"), list):
        raise DomainError("InputError", 'family spec must be {"coeffs": [...]}')
    report = hyperelliptic.equigeneric_path_check(spec["coeffs"], args.samples)
    return report.as_dict()


def cmd_family_stratify(args) -> dict:
    st = hyperelliptic.stratify_cubic(args.a, args.b)
    fc = hyperelliptic.classify_fiber([args.b, args.a, 0, 1])
    out = st.as_dict()
    out["types"] = fc.labels()
    return out


def _surface(args):
    if args.surface == "p2":
        if args.d is None:
            raise DomainError("InvalidSpec", "--surface p2 needs --d")
        return strata.P2(args.d)
    if args.surface == "k3":
        if args.g is None:
            raise DomainError("InvalidSpec", "--surface k3 needs --g")
        return strata.K3(args.g)
    if None in (args.n, args.a, args.b):
        raise DomainError("InvalidSpec", "--surface hirzebruch needs --n, --a and --b")
    return strata.Hirzebruch(args.n, args.a, args.b)


def cmd_strata_expdim(args) -> dict:
    s = _surface(args)
    q = strata.StrataQuery(args.delta, args.kappa)
    if isinstance(s, strata.Hirzebruch) and s.b < s.a * s.n:
        log.warning("b < a*n: dimension formula assumes b sufficiently large")
    return strata.summary(s, q)


def _defmap_spec(path: str) -> defmap.DeformationMap:
    spec = _load_json(path)
    if not isinstance(spec, dict) or "matrix" not in spec:
        raise DomainError("InputError", 'defmap spec must be {"budgets": [...], "matrix": [...]}')
    try:
        return defmap.DeformationMap.build(spec["matrix"], spec.get("budgets", ()))
    except (TypeError, ValueError) as exc:
        if isinstance(exc, DOMAIN_ERRORS):
            raise
        raise DomainError("InputError", str(exc)) from None


def cmd_defmap_rank(args) -> dict:
    M = _defmap_spec(args.spec)
    rank = defmap.image_dimension(M)
    if defmap.rank_bareiss(M.matrix) != rank:
        raise ArithmeticError("rank pipelines disagree")
    return {"rows": M.rows, "columns": M.columns, "rank": rank,
            "codim_budget": defmap.codim_budget(M.budgets),
            "max_singular_count": defmap.max_singular_count(M)}


def cmd_defmap_realize(args) -> dict:
    M = _defmap_spec(args.spec)
    xi = defmap.realizable(M, args.target)
    return {"target": args.target, "realizable": True, "section": list(xi)}


def _per_type_paths(result) -> list[dict]:
    return [{"index": k, **c.as_dict()} for k, c in enumerate(result.curves)]


def cmd_tropical_count(args) -> dict:
    d, delta = args.d, args.delta
    lattice_paths._check_range(d, delta)
    out = {"d": d, "delta": delta, "points": max(lattice_paths.path_length(d, delta), 0)}
    if args.algorithm == "floor":
        diagrams = floor.floor_diagrams(d, delta)
        out["total"] = sum(f.contribution for f in diagrams)
        out["per_type"] = [{"index": k, **f.as_dict()} for k, f in enumerate(diagrams)]
        return out
    res = lattice_paths.enumerate_curves(d, delta)
    log.info("enumerated %d curve types", len(res.curves))
    out["total"] = res.total
    if args.algorithm == "both":
        floor_total = floor.severi_degree_floor(d, delta)
        out["floor_total"] = floor_total
        out["agree"] = floor_total == res.total
    out["configuration"] = [list(p) for p in res.points]
    out["per_type"] = _per_type_paths(res)
    return out


def _edge_refs(text: str) -> list[str]:
    return [t for t in (s.strip() for s in text.split(",")) if t]


def cmd_tropical_contract(args) -> dict:
    c = tcurve.TropicalCurve.from_json(_load_json(args.curve))
    chosen = _edge_refs(args.edges)
    con = tcurve.contract_edges(c, chosen)
    k = len(con.contracted)
    out = {
        "contracted": list(con.contracted),
        "vanishing_lengths": k,
        "codimension": k,
        "cusp_candidate": k >= 2,
        "merged_valences": con.merged_valences,
        "valence_four": 4 in con.merged_valences,
        "valence_profile": {str(v): n for v, n in con.valence_profile().items()},
        "balanced": con.balanced,
        "degree_preserved": con.curve.ray_multiset() == c.ray_multiset(),
        "warning": tcurve.CuspSignature(k, con).warning if k else None,
        "curve": con.curve.to_json(),
    }
    return out


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="severi-lab", description="Exact computations for singular curves.")
    p.add_argument("-v", "--verbose", action="count", default=0,
                   help="log to standard error (-v info, -vv debug)")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    top = p.add_subparsers(dest="group", required=True, parser_class=_Parser)
    # leaf commands also accept --format after the subcommand
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "csv"), default=argparse.SUPPRESS)

    g = top.add_parser("germ").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    a = g.add_parser("analyze", parents=[fmt], help="invariants of a plane curve germ at the origin")
    a.add_argument("poly")
    a.set_defaults(func=cmd_germ_analyze)

    f = top.add_parser("family").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    a = f.add_parser("scan", parents=[fmt], help="classify y^2 = p_s(x) along sample values of s")
    a.add_argument("--spec", required=True)
    a.add_argument("--samples", required=True, type=_rational_list)
    a.set_defaults(func=cmd_family_scan)
    a = f.add_parser("stratify", parents=[fmt], help="stratum of y^2 = x^3 + a x + b")
    a.add_argument("--a", required=True, type=_rational)
    a.add_argument("--b", required=True, type=_rational)
    a.set_defaults(func=cmd_family_stratify)

    s = top.add_parser("strata").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    a = s.add_parser("expdim", parents=[fmt], help="expected dimension of a Severi-type stratum")
    a.add_argument("--surface", required=True, choices=("p2", "k3", "hirzebruch"))
    for name in ("d", "g", "n", "a", "b"):
        a.add_argument(f"--{name}", type=int)
    a.add_argument("--delta", type=int, default=0)
    a.add_argument("--kappa", type=int, default=0)
    a.set_defaults(func=cmd_strata_expdim)

    m = top.add_parser("defmap").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    a = m.add_parser("rank", parents=[fmt], help="rank of the global-to-local map")
    a.add_argument("--spec", required=True)
    a.set_defaults(func=cmd_defmap_rank)
    a = m.add_parser("realize", parents=[fmt], help="solve M xi = target exactly")
    a.add_argument("--spec", required=True)
    a.add_argument("--target", required=True, type=_rational_list)
    a.set_defaults(func=cmd_defmap_realize)

    t = top.add_parser("tropical").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    a = t.add_parser("count", parents=[fmt], help="tropical Severi degree")
    a.add_argument("--d", required=True, type=int)
    a.add_argument("--delta", required=True, type=int)
    a.add_argument("--algorithm", choices=("paths", "floor", "both"), default="paths")
    a.set_defaults(func=cmd_tropical_count)
    a = t.add_parser("contract", parents=[fmt], help="contract bounded edges of a tropical curve")
    a.add_argument("--curve", required=True)
    a.add_argument("--edges", required=True)
    a.set_defaults(func=cmd_tropical_contract)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = [logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose, 2)]
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(message)s"))
    log.handlers[:] = [handler]
    log.setLevel(level)
    log.propagate = False
    out = sys.stdout.buffer
    try:
        result = args.func(args)
        code = 0
    except DomainError as exc:
        result, code = {"error": exc.kind, "message": str(exc)}, 1
    except DOMAIN_ERRORS as exc:
        result, code = {"error": type(exc).__name__, "message": str(exc)}, 1
    log.debug("exit %d", code)
    try:
        payload = emit(result, args.format)
    except UnsupportedFormat as exc:  # unreachable through argparse choices
        print(exc, file=sys.stderr)
        return 2
    out.write(payload)
    out.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
