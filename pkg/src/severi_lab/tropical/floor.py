"""Severi degrees of P^2 by labelled floor diagrams.

A floor diagram of degree ``d`` has vertices ``1..d`` and weighted edges
``i -> j`` with ``i < j``; every vertex has divergence (outgoing minus incoming
weight) at most 1.  Disconnected diagrams are allowed, so reducible curves are
counted.  A diagram with ``d - 1 + g`` edges has cogenus ``p_a(d) - g``.

The count of a diagram is ``mu * nu``: ``mu`` is the product of squared edge
weights and ``nu`` the number of markings, i.e. linear extensions of the
poset obtained by hanging ``1 - div(v)`` leaves above each vertex and putting
a midpoint on each edge, taken up to swapping interchangeable leaves or
midpoints.  This is independent of the lattice-path code and serves as its
cross-check.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import factorial

from .lattice_paths import _check_range, path_length

FloorEdge = tuple[int, int, int]   # (i, j, weight) with i < j


@dataclass(frozen=True)
class FloorDiagram:
    d: int
    edges: tuple[FloorEdge, ...]
    multiplicity: int
    markings: int

    @property
    def contribution(self) -> int:
        return self.multiplicity * self.markings

    def divergence(self, v: int) -> int:
        return (sum(w for i, _, w in self.edges if i == v)
                - sum(w for _, j, w in self.edges if j == v))

    def as_dict(self) -> dict:
        return {"edges": [list(e) for e in self.edges],
                "multiplicity": self.multiplicity,
                "markings": self.markings}


def _divergences(d: int, edges) -> list[int]:
    div = [0] * (d + 1)
    for i, j, w in edges:
        div[i] += w
        div[j] -= w
    return div


def count_linear_extensions(n: int, below: list[int]) -> int:
    """Linear extensions of a poset on ``0..n-1``; ``below[k]`` is the bitmask
    of elements that must precede ``k``."""
    ways = [0] * (1 << n)
    ways[0] = 1
    for mask in range(1 << n):
        if not ways[mask]:
            continue
        for k in range(n):
            bit = 1 << k
            if not mask & bit and below[k] & mask == below[k]:
                ways[mask | bit] += ways[mask]
    return ways[(1 << n) - 1]


def markings(d: int, edges: tuple[FloorEdge, ...]) -> int:
    div = _divergences(d, edges)
    # elements 0..d-1 are the floors, in their fixed order
    below = [((1 << k) - 1) for k in range(d)]
    twins = 1
    for v in range(1, d + 1):
        leaves = 1 - div[v]
        for _ in range(leaves):
            below.append(1 << (v - 1))
        twins *= factorial(leaves)
    for i, j, _ in edges:
        below.append(1 << (i - 1))
    n = len(below)
    # a floor j must come after every midpoint of an edge ending at j
    for k, (i, j, _) in enumerate(edges):
        below[j - 1] |= 1 << (n - len(edges) + k)
    for cnt in Counter(edges).values():
        twins *= factorial(cnt)
    return count_linear_extensions(n, below) // twins


def floor_diagrams(d: int, delta: int) -> list[FloorDiagram]:
    """All diagrams of degree ``d`` and cogenus ``delta``, in canonical order."""
    _check_range(d, delta)
    pa = (d - 1) * (d - 2) // 2
    n_edges = d - 1 + pa - delta
    if n_edges < 0 or path_length(d, delta) < 1:
        return []
    triples = [(i, j, w) for i in range(1, d + 1) for j in range(i + 1, d + 1)
               for w in range(1, d + 1)]
    out = []
    for edges in combinations_with_replacement(triples, n_edges):
        if any(x > 1 for x in _divergences(d, edges)[1:]):
            continue
        mu = 1
        for _, _, w in edges:
            mu *= w * w
        out.append(FloorDiagram(d, edges, mu, markings(d, edges)))
    return [f for f in out if f.markings]


def severi_degree_floor(d: int, delta: int) -> int:
    return sum(f.contribution for f in floor_diagrams(d, delta))
