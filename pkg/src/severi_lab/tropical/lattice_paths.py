"""Severi degrees of P^2 by lattice paths in the Newton triangle.

Lattice points of ``{i, j >= 0, i + j <= d}`` are ordered by the linear form
``lam(i, j) = i - EPSILON * j``.  A lam-increasing path from ``(0, d)`` to
``(d, 0)`` with ``n = d(d+3)/2 - delta`` steps is completed on each side to a
subdivision by the usual recursion (cut a triangle at the first turn, or
complete a parallelogram); triangles contribute their doubled area.

Every completed subdivision is also realised as an honest tropical curve
through the points ``p_k = BASE**k * (1, -EPSILON)``: the tropical polynomial's
coefficients are fixed by requiring ``p_k`` on the edge dual to step ``k``,
and the result is checked to induce exactly the enumerated subdivision.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, gcd

from .curve import Edge, Ray, TropicalCurve

#: slope of the point line; the prime denominator exceeds every lattice
#: determinant that can occur for d <= MAX_DEGREE (at most 2 * area = 16)
EPSILON = Fraction(1, 17)
#: ratio between consecutive point positions along the line; realisation
#: succeeds for every (d <= 4, delta) from 32 upward, 256 leaves margin
BASE = 256
MAX_DEGREE = 4

Point = tuple[int, int]


class OutOfRange(ValueError):
    pass


class RealizationError(ArithmeticError):
    """A subdivision could not be realised through the configured points."""


@dataclass(frozen=True)
class Cell:
    kind: str                      # "triangle" | "parallelogram"
    vertices: tuple[Point, ...]    # triangle (a, b, c); parallelogram (a, b, c, a + c - b)

    def sides(self) -> list[tuple[Point, Point]]:
        vs = self.vertices
        if self.kind == "triangle":
            return [(vs[0], vs[1]), (vs[1], vs[2]), (vs[2], vs[0])]
        a, b, c, w = vs
        return [(a, b), (b, c), (c, w), (w, a)]

    def opposite(self, side: tuple[Point, Point]) -> tuple[Point, Point]:
        a, b, c, w = self.vertices
        pairs = {frozenset((a, b)): (w, c), frozenset((w, c)): (a, b),
                 frozenset((b, c)): (a, w), frozenset((a, w)): (b, c)}
        return pairs[frozenset(side)]

    def sort_key(self) -> tuple:
        return (self.kind, tuple(sorted(self.vertices)))


@dataclass
class EnumeratedCurve:
    path: tuple[Point, ...]
    cells: tuple[Cell, ...]
    multiplicity: int
    curve: TropicalCurve

    @property
    def triangles(self) -> list[Cell]:
        return [c for c in self.cells if c.kind == "triangle"]

    @property
    def parallelograms(self) -> list[Cell]:
        return [c for c in self.cells if c.kind == "parallelogram"]

    def genus(self, d: int) -> int:
        """Interior lattice points used by the subdivision minus crossings."""
        used = {v for c in self.cells for v in c.vertices}
        interior = sum(1 for (i, j) in used if i > 0 and j > 0 and i + j < d)
        return interior - len(self.parallelograms)

    def type_key(self) -> tuple:
        return (self.path, tuple(sorted(c.sort_key() for c in self.cells)))

    def as_dict(self) -> dict:
        return {
            "path": [list(p) for p in self.path],
            "cells": [{"kind": c.kind, "vertices": [list(v) for v in c.vertices]}
                      for c in self.cells],
            "multiplicity": self.multiplicity,
            "curve": self.curve.to_json(),
        }


@dataclass
class EnumerationResult:
    d: int
    delta: int
    points: tuple[tuple[Fraction, Fraction], ...]
    curves: tuple[EnumeratedCurve, ...]

    @property
    def point_count(self) -> int:
        return len(self.points)

    @property
    def total(self) -> int:
        return sum(c.multiplicity for c in self.curves)


def _lam(v: Point) -> Fraction:
    return v[0] - EPSILON * v[1]


def _in_triangle(v: Point, d: int) -> bool:
    return v[0] >= 0 and v[1] >= 0 and v[0] + v[1] <= d


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - a[1]) - (a[1] - o[1]) * (b[0] - a[0])


def ordered_lattice_points(d: int) -> list[Point]:
    pts = [(i, j) for i in range(d + 1) for j in range(d + 1 - i)]
    return sorted(pts, key=_lam)


def boundary_paths(d: int) -> tuple[tuple[Point, ...], tuple[Point, ...]]:
    """(upper, lower): along the hypotenuse, and down the left side then along the bottom."""
    upper = tuple((i, d - i) for i in range(d + 1))
    lower = tuple((0, j) for j in range(d, 0, -1)) + tuple((i, 0) for i in range(d + 1))
    return upper, lower


@lru_cache(maxsize=None)
def _completions(path: tuple[Point, ...], side: int, d: int) -> tuple[tuple[tuple[Cell, ...], int], ...]:
    """All ways to fill the region between ``path`` and the boundary on one side.

    ``side = +1`` is the hypotenuse side (left of travel, cut at left turns);
    ``side = -1`` the other one.  Returns ``(cells, multiplicity)`` pairs.
    """
    target = boundary_paths(d)[0 if side > 0 else 1]
    if path == target:
        return (((), 1),)
    for j in range(1, len(path) - 1):
        turn = _cross(path[j - 1], path[j], path[j + 1])
        if side * turn > 0:
            break
    else:
        return ()
    a, b, c = path[j - 1], path[j], path[j + 1]
    out = []
    tri = Cell("triangle", (a, b, c))
    for cells, mult in _completions(path[:j] + path[j + 1:], side, d):
        out.append(((tri,) + cells, mult * abs(turn)))
    w = (a[0] + c[0] - b[0], a[1] + c[1] - b[1])
    if _in_triangle(w, d):
        par = Cell("parallelogram", (a, b, c, w))
        for cells, mult in _completions(path[:j] + (w,) + path[j + 1:], side, d):
            out.append(((par,) + cells, mult))
    return tuple(out)


def point_configuration(n: int) -> tuple[tuple[Fraction, Fraction], ...]:
    return tuple((Fraction(BASE ** k), -EPSILON * BASE ** k) for k in range(1, n + 1))


def _check_range(d: int, delta: int) -> None:
    if not isinstance(d, int) or not 1 <= d <= MAX_DEGREE:
        raise OutOfRange(f"degree must be in 1..{MAX_DEGREE}, got {d!r}")
    if not isinstance(delta, int) or delta < 0:
        raise OutOfRange(f"delta must be a nonnegative integer, got {delta!r}")


def path_length(d: int, delta: int) -> int:
    """Number of points = dim |O(d)| - delta."""
    return comb(d + 2, 2) - 1 - delta


def enumerate_curves(d: int, delta: int) -> EnumerationResult:
    """All tropical curves of degree ``d`` with ``delta`` nodes through the
    generic configuration, in canonical order."""
    _check_range(d, delta)
    n = path_length(d, delta)
    if n < 1:
        return EnumerationResult(d, delta, (), ())
    pts = point_configuration(n)
    order = ordered_lattice_points(d)
    start, end, middle = order[0], order[-1], order[1:-1]
    records = []
    for chosen in combinations(middle, n - 1):
        path = (start,) + chosen + (end,)
        upper = _completions(path, 1, d)
        if not upper:
            continue
        lower = _completions(path, -1, d)
        for cu, mu in upper:
            for cl, ml in lower:
                cells = cu + cl
                curve = realize(path, cells, pts, d)
                records.append(EnumeratedCurve(path, cells, mu * ml, curve))
    records.sort(key=EnumeratedCurve.type_key)
    return EnumerationResult(d, delta, pts, tuple(records))


def severi_degree(d: int, delta: int) -> int:
    return enumerate_curves(d, delta).total


# -- geometric realisation ---------------------------------------------------

def _value(coef: dict, v: Point, X) -> Fraction:
    return coef[v] + v[0] * X[0] + v[1] * X[1]


def _argmax(coef: dict, X) -> set[Point]:
    vals = {v: _value(coef, v, X) for v in coef}
    top = max(vals.values())
    return {v for v, val in vals.items() if val == top}


def _tie_point(coef: dict, a: Point, b: Point, c: Point) -> tuple[Fraction, Fraction]:
    # <b - a, X> = c_a - c_b and <c - a, X> = c_a - c_c
    r1, s1, t1 = b[0] - a[0], b[1] - a[1], coef[a] - coef[b]
    r2, s2, t2 = c[0] - a[0], c[1] - a[1], coef[a] - coef[c]
    det = r1 * s2 - r2 * s1
    return (Fraction(t1 * s2 - t2 * s1, 1) / det, Fraction(r1 * t2 - r2 * t1, 1) / det)


def _outward(side: tuple[Point, Point], third: Point) -> tuple[tuple[int, int], int]:
    (p, q) = side
    dx, dy = q[0] - p[0], q[1] - p[1]
    w = gcd(dx, dy)
    u = (-dy // w, dx // w)
    if u[0] * (p[0] - third[0]) + u[1] * (p[1] - third[1]) < 0:
        u = (-u[0], -u[1])
    return u, w


def _on_boundary(side: tuple[Point, Point], d: int) -> bool:
    (p, q) = side
    return ((p[0] == 0 and q[0] == 0) or (p[1] == 0 and q[1] == 0)
            or (sum(p) == d and sum(q) == d))


def realize(path: tuple[Point, ...], cells: tuple[Cell, ...],
            pts: tuple[tuple[Fraction, Fraction], ...], d: int) -> TropicalCurve:
    """Build the tropical curve of a completed subdivision through ``pts``.

    Raises RealizationError unless the coefficients induce exactly ``cells``
    and every ``pts[k]`` lies in the relative interior of the edge dual to
    step ``k`` of the path.
    """
    coef: dict[Point, Fraction] = {path[0]: Fraction(0)}
    for k in range(1, len(path)):
        a, b, p = path[k - 1], path[k], pts[k - 1]
        coef[b] = coef[a] + (a[0] - b[0]) * p[0] + (a[1] - b[1]) * p[1]
    for cell in cells:
        if cell.kind == "parallelogram":
            a, b, c, w = cell.vertices
            val = coef[a] + coef[c] - coef[b]
            if coef.setdefault(w, val) != val:
                raise RealizationError(f"inconsistent height at {w}")

    for k in range(1, len(path)):
        if _argmax(coef, pts[k - 1]) != {path[k - 1], path[k]}:
            raise RealizationError(f"point {k} is not on the edge dual to step {k}")
    triangles = [c for c in cells if c.kind == "triangle"]
    positions = []
    for cell in cells:
        X = _tie_point(coef, *cell.vertices[:3])
        if _argmax(coef, X) != set(cell.vertices):
            raise RealizationError(f"cell {cell.vertices} is not induced by the heights")
        if cell.kind == "triangle":
            positions.append(X)

    owners: dict[frozenset, list[Cell]] = {}
    for cell in cells:
        for s in cell.sides():
            owners.setdefault(frozenset(s), []).append(cell)
    tri_index = {id(t): k for k, t in enumerate(triangles)}
    edges, rays = [], []
    for k, tri in enumerate(triangles):
        for s in tri.sides():
            third = next(v for v in tri.vertices if v not in s)
            u, w = _outward(s, third)
            here, side = tri, s
            while True:
                others = [c for c in owners[frozenset(side)] if c is not here]
                if not others:
                    if not _on_boundary(side, d):
                        raise RealizationError(f"side {side} has only one cell")
                    rays.append(Ray(k, u, w))
                    break
                if len(others) > 1:
                    raise RealizationError(f"side {side} shared by >2 cells")
                here = others[0]
                if here.kind == "triangle":
                    j = tri_index[id(here)]
                    if k < j:
                        (x0, y0), (x1, y1) = positions[k], positions[j]
                        dx, dy = x1 - x0, y1 - y0
                        length = dx / u[0] if u[0] else dy / u[1]
                        if length <= 0 or (dx, dy) != (length * u[0], length * u[1]):
                            raise RealizationError("edge of non-positive length")
                        edges.append(Edge((k, j), u, w, length))
                    break
                side = here.opposite(side)
    return TropicalCurve(positions, edges, rays, d)
