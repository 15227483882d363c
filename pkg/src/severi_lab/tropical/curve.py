"""Plane tropical curves: balanced weighted graphs with rational vertices.

Bounded edges carry a primitive integer direction pointing from ``v[0]`` to
``v[1]`` and a lattice length, so ``pos(v[1]) - pos(v[0]) = length * dir``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from ..poly import to_fraction

DEGREE_DIRECTIONS = ((-1, 0), (0, -1), (1, 1))


class InvalidEdge(ValueError):
    pass


class NonPositiveValuation(ValueError):
    pass


class CurveFormatError(ValueError):
    pass


@dataclass(frozen=True)
class Edge:
    v: tuple[int, int]
    direction: tuple[int, int]
    weight: int
    length: Fraction


@dataclass(frozen=True)
class Ray:
    v: int
    direction: tuple[int, int]
    weight: int


@dataclass
class TropicalCurve:
    vertices: list[tuple[Fraction, Fraction]]
    edges: list[Edge] = field(default_factory=list)
    rays: list[Ray] = field(default_factory=list)
    degree: int | None = None

    def incident(self, i: int) -> list[tuple[tuple[int, int], int]]:
        """Outgoing (direction, weight) pairs at vertex ``i``; loops count twice."""
        out = []
        for e in self.edges:
            if e.v[0] == i:
                out.append((e.direction, e.weight))
            if e.v[1] == i:
                out.append(((-e.direction[0], -e.direction[1]), e.weight))
        for r in self.rays:
            if r.v == i:
                out.append((r.direction, r.weight))
        return out

    def valence(self, i: int) -> int:
        return len(self.incident(i))

    def valences(self) -> list[int]:
        return [self.valence(i) for i in range(len(self.vertices))]

    def ray_multiset(self) -> Counter:
        c: Counter = Counter()
        for r in self.rays:
            c[r.direction] += r.weight
        return c

    # -- JSON -------------------------------------------------------------

    def to_json(self) -> dict:
        out: dict = {}
        if self.degree is not None:
            out["degree"] = self.degree
        out["vertices"] = [[str(x), str(y)] for x, y in self.vertices]
        out["edges"] = [{"v": list(e.v), "dir": list(e.direction), "weight": e.weight,
                         "length": str(e.length)} for e in self.edges]
        out["rays"] = [{"v": r.v, "dir": list(r.direction), "weight": r.weight}
                       for r in self.rays]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "TropicalCurve":
        try:
            verts = [(to_fraction(x), to_fraction(y)) for x, y in data["vertices"]]
            edges = [Edge((int(e["v"][0]), int(e["v"][1])),
                          (int(e["dir"][0]), int(e["dir"][1])),
                          int(e.get("weight", 1)), to_fraction(e["length"]))
                     for e in data.get("edges", [])]
            rays = [Ray(int(r["v"]), (int(r["dir"][0]), int(r["dir"][1])),
                        int(r.get("weight", 1)))
                    for r in data.get("rays", [])]
        except (KeyError, TypeError, ValueError) as exc:
            raise CurveFormatError(f"malformed tropical curve: {exc}") from exc
        n = len(verts)
        for e in edges:
            if not (0 <= e.v[0] < n and 0 <= e.v[1] < n):
                raise CurveFormatError(f"edge {e.v} references a missing vertex")
            if e.weight < 1 or e.length < 0:
                raise CurveFormatError("edge weights must be >= 1 and lengths >= 0")
        for r in rays:
            if not 0 <= r.v < n:
                raise CurveFormatError(f"ray at missing vertex {r.v}")
            if r.weight < 1:
                raise CurveFormatError("ray weights must be >= 1")
        degree = data.get("degree")
        return cls(verts, edges, rays, int(degree) if degree is not None else None)


def check_balancing(c: TropicalCurve) -> bool:
    """Every vertex satisfies sum(weight * outgoing direction) == 0."""
    for i in range(len(c.vertices)):
        sx = sy = 0
        for (dx, dy), w in c.incident(i):
            sx += w * dx
            sy += w * dy
        if sx or sy:
            return False
    return True


def check_degree(c: TropicalCurve, d: int) -> bool:
    """Rays are exactly ``d`` copies (with weight) of each standard direction."""
    return c.ray_multiset() == Counter({u: d for u in DEGREE_DIRECTIONS})


def check_geometry(c: TropicalCurve) -> bool:
    """Directions primitive, lengths positive, endpoints consistent with lengths."""
    for e in c.edges:
        dx, dy = e.direction
        if gcd(dx, dy) != 1 or e.length <= 0:
            return False
        (x0, y0), (x1, y1) = c.vertices[e.v[0]], c.vertices[e.v[1]]
        if (x1 - x0, y1 - y0) != (e.length * dx, e.length * dy):
            return False
    return all(gcd(*r.direction) == 1 for r in c.rays)


def is_trivalent(c: TropicalCurve) -> bool:
    return all(v == 3 for v in c.valences())


@dataclass
class Contraction:
    curve: TropicalCurve
    contracted: tuple[int, ...]
    merged: tuple[int, ...]          # new indices of vertices that absorbed an edge
    balanced: bool

    @property
    def valences(self) -> list[int]:
        return self.curve.valences()

    @property
    def merged_valences(self) -> list[int]:
        return [self.curve.valence(i) for i in self.merged]

    def valence_profile(self) -> dict[int, int]:
        return dict(sorted(Counter(self.valences).items()))


def _edge_set(c: TropicalCurve, edges: Iterable) -> tuple[int, ...]:
    chosen = []
    for e in edges:
        if isinstance(e, str):
            e = e.strip()
            e = e[1:] if e[:1] in ("e", "E") else e
            if not e.isdigit():
                raise InvalidEdge(f"bad edge reference {e!r}")
            e = int(e)
        if not isinstance(e, int) or not 0 <= e < len(c.edges):
            raise InvalidEdge(f"no bounded edge {e!r} (curve has {len(c.edges)})")
        if e in chosen:
            raise InvalidEdge(f"edge {e} listed twice")
        chosen.append(e)
    return tuple(sorted(chosen))


def contract_edges(c: TropicalCurve, edges: Iterable) -> Contraction:
    """Shrink the given bounded edges to length zero and identify their ends.

    The merged vertex keeps the position of its lowest-indexed member; the
    other edges keep their lengths (a combinatorial contraction).
    """
    chosen = _edge_set(c, edges)
    parent = list(range(len(c.vertices)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for k in chosen:
        a, b = (find(v) for v in c.edges[k].v)
        if a != b:
            parent[max(a, b)] = min(a, b)
    roots = sorted({find(i) for i in range(len(c.vertices))})
    new_index = {r: k for k, r in enumerate(roots)}
    remap = [new_index[find(i)] for i in range(len(c.vertices))]
    kept = [replace(e, v=(remap[e.v[0]], remap[e.v[1]]))
            for k, e in enumerate(c.edges) if k not in chosen]
    rays = [replace(r, v=remap[r.v]) for r in c.rays]
    new = TropicalCurve([c.vertices[r] for r in roots], kept, rays, c.degree)
    merged = tuple(sorted({remap[c.edges[k].v[0]] for k in chosen}))
    return Contraction(new, chosen, merged, check_balancing(new))


@dataclass
class CuspSignature:
    vanishing: int
    contraction: Contraction

    @property
    def codimension(self) -> int:
        return self.vanishing

    @property
    def cusp_candidate(self) -> bool:
        return self.vanishing >= 2

    @property
    def valence_four(self) -> bool:
        return 4 in self.contraction.merged_valences

    @property
    def warning(self) -> str | None:
        if self.vanishing >= 3:
            return f"{self.vanishing} lengths vanish: degeneration worse than a cusp"
        return None

    def as_dict(self) -> dict:
        return {
            "vanishing_lengths": self.vanishing,
            "codimension": self.codimension,
            "cusp_candidate": self.cusp_candidate,
            "merged_valences": self.contraction.merged_valences,
            "valence_four": self.valence_four,
            "valence_profile": {str(k): v for k, v in
                                self.contraction.valence_profile().items()},
            "balanced": self.contraction.balanced,
            "warning": self.warning,
        }


def cusp_signature(c: TropicalCurve, vanishing_edges: Sequence) -> CuspSignature:
    """Boundary data when the given edge lengths go to zero together.

    ``cusp_candidate`` follows the count of simultaneously vanishing lengths;
    whether a merged vertex has valence four is reported separately.
    """
    chosen = _edge_set(c, vanishing_edges)
    if not chosen:
        raise InvalidEdge("need at least one vanishing edge")
    return CuspSignature(len(chosen), contract_edges(c, chosen))


def node_edge_length(val_t) -> Fraction:
    """Edge length of the node ``xy = t`` from the valuation of ``t``.

    The proportionality constant is 1.  Valuation 0 (``t`` a unit) means the
    node is not smoothed and gives length 0.
    """
    v = to_fraction(val_t)
    if v < 0:
        raise NonPositiveValuation(f"valuation must be >= 0, got {v}")
    return v
