"""Exact JSON and CSV serialisation of command results.

Integers are bare numbers when ``|v| < 2**53`` and strings otherwise;
rationals are ``"p/q"`` strings in lowest terms.  Floats are rejected.
"""
from __future__ import annotations

import csv
import io
import json
from enum import Enum
from fractions import Fraction

SAFE_INT = 2 ** 53


class UnsupportedFormat(ValueError):
    pass


def exact(value):
    """Recursively convert to JSON-ready values without losing exactness."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, Enum):
        return exact(value.value)
    if isinstance(value, int):
        return value if abs(value) < SAFE_INT else str(value)
    if isinstance(value, Fraction):
        return exact(value.numerator) if value.denominator == 1 else str(value)
    if isinstance(value, float):
        raise TypeError(f"refusing to serialise float {value!r}")
    if isinstance(value, dict):
        return {str(k): exact(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [exact(v) for v in value]
    raise TypeError(f"cannot serialise {type(value).__name__}")


def to_json(result) -> str:
    return json.dumps(exact(result), indent=2, ensure_ascii=False) + "\n"


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (dict, list)):
        return json.dumps(v, separators=(",", ":"), ensure_ascii=False)
    return str(v)


def _records_key(result: dict) -> str | None:
    for k, v in result.items():
        if isinstance(v, list) and v and all(isinstance(r, dict) for r in v):
            return k
    return None


def to_csv(result) -> str:
    """Header row plus one row; a list of records (the first list-of-objects
    field) is flattened to one row per record, beside the scalar fields."""
    data = exact(result)
    if not isinstance(data, dict):
        data = {"value": data}
    key = _records_key(data)
    base = {k: v for k, v in data.items() if k != key}
    rows = [base] if key is None else [{**base, **r} for r in data[key]]
    header: list[str] = []
    for r in rows:
        header.extend(k for k in r if k not in header)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([_cell(r.get(k)) for k in header])
    return buf.getvalue()


def emit(result, fmt: str = "json") -> bytes:
    if fmt == "json":
        return to_json(result).encode("utf-8")
    if fmt == "csv":
        return to_csv(result).encode("utf-8")
    raise UnsupportedFormat(f"unknown output format {fmt!r}; expected json or csv")
