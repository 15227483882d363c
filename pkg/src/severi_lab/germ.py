"""Local invariants of isolated plane curve germs at the origin.

Two independent pipelines are used on purpose:

* Milnor and Tjurina numbers come from linear algebra in the truncated local
  algebra ``Q[x, y] / (I + m^D)``.
* delta and the branch count come from an embedded resolution by point
  blow-ups (:func:`resolve`), using ``delta = sum m_i (m_i - 1) / 2`` over the
  infinitely near points.

Milnor's formula ``mu = 2 delta - r + 1`` ties the two together and is used as
a cross-check in the test-suite.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterable

import sympy

from .fields import QQ, RationalField, NumberField
from .poly import BivariatePoly, ZeroPolynomial, format_terms, udeg, utrim

__all__ = [
    "GermError", "NonIsolated", "NotThroughOrigin", "ResolutionDepthExceeded",
    "ZeroPolynomial", "GermReport", "BlowupNode", "BlowupLeaf", "BlowupTree",
    "multiplicity", "milnor_number", "tjurina_number", "local_algebra_dim",
    "resolve", "delta_invariant", "branch_count", "classify", "as_poly",
]

#: hard cap on the truncation degree of the local algebra
MAX_TRUNCATION = 64
#: hard cap on the number of successive blow-ups along one branch
MAX_BLOWUP_DEPTH = 64


class GermError(ValueError):
    pass


class NonIsolated(GermError):
    pass


class NotThroughOrigin(GermError):
    pass


class ResolutionDepthExceeded(GermError):
    pass


def as_poly(f) -> BivariatePoly:
    if isinstance(f, BivariatePoly):
        return f
    if isinstance(f, str):
        return BivariatePoly.parse(f)
    raise TypeError(f"expected BivariatePoly or polynomial string, got {type(f).__name__}")


def multiplicity(f) -> int:
    """Order of vanishing of ``f`` at the origin."""
    return as_poly(f).order()


# -- isolatedness ---------------------------------------------------------

_X, _Y = sympy.symbols("x y")


def _to_sympy(f: BivariatePoly) -> sympy.Poly:
    data = {k: sympy.Rational(c.numerator, c.denominator) for k, c in f.terms.items()}
    return sympy.Poly.from_dict(data or {(0, 0): 0}, _X, _Y, domain="QQ")


def _check_isolated(f: BivariatePoly) -> None:
    """Raise NonIsolated if ``f, f_x, f_y`` share a factor through the origin."""
    g = _to_sympy(f)
    for h in (f.diff_x(), f.diff_y()):
        g = sympy.gcd(g, _to_sympy(h))
    if g.total_degree() > 0 and g.eval({_X: 0, _Y: 0}) == 0:
        raise NonIsolated(f"singularity of {f} at the origin is not isolated "
                          f"(common factor {g.as_expr()})")


def _prepare(f) -> BivariatePoly:
    f = as_poly(f)
    if not f:
        raise ZeroPolynomial("the zero polynomial does not define a germ")
    if f.order() == 0:
        raise NotThroughOrigin(f"{f} does not vanish at the origin")
    _check_isolated(f)
    return f


# -- truncated local algebra ------------------------------------------------

def _quotient_dim(generators: list[BivariatePoly], D: int) -> int:
    """dim_Q of Q[x,y] / (generators + m^D)."""
    index = {}
    for deg in range(D):
        for i in range(deg, -1, -1):
            index[(i, deg - i)] = len(index)
    pivots: dict[int, dict[int, Fraction]] = {}
    for g in generators:
        if not g:
            continue
        og = g.order()
        for deg in range(D - og):
            for a in range(deg + 1):
                b = deg - a
                row = {index[(a + i, b + j)]: c for (i, j), c in g.terms.items()
                       if a + i + b + j < D}
                while row:
                    col = min(row)
                    piv = pivots.get(col)
                    if piv is None:
                        inv = 1 / row[col]
                        pivots[col] = {k: v * inv for k, v in row.items()}
                        break
                    factor = row[col]
                    for k, v in piv.items():
                        nv = row.get(k, 0) - factor * v
                        if nv:
                            row[k] = nv
                        else:
                            row.pop(k, None)
    return len(index) - len(pivots)


def local_algebra_dim(generators: Iterable[BivariatePoly], start: int,
                      cap: int = MAX_TRUNCATION) -> int:
    """Dimension of the local algebra at 0 of the ideal spanned by ``generators``.

    The dimension of ``Q[x,y]/(I + m^D)`` is nondecreasing in ``D``; equality at
    ``D`` and ``D + 1`` forces ``m^D`` into ``I`` locally (Nakayama), so that value
    is the answer.  ``D`` starts at ``start`` and doubles up to ``cap``.
    """
    gens = [g for g in generators if g]
    D = max(start, 1)
    while D <= cap:
        a = _quotient_dim(gens, D)
        b = _quotient_dim(gens, D + 1)
        if a == b:
            return a
        D *= 2
    raise NonIsolated(f"local algebra did not stabilise up to truncation degree {cap}")


def milnor_number(f) -> int:
    f = _prepare(f)
    return local_algebra_dim([f.diff_x(), f.diff_y()], 2 * f.degree())


def tjurina_number(f) -> int:
    f = _prepare(f)
    return local_algebra_dim([f, f.diff_x(), f.diff_y()], 2 * f.degree())


# -- resolution by point blow-ups -------------------------------------------

@dataclass
class BlowupNode:
    """An infinitely near point that gets blown up.

    ``weight`` is the number of Galois-conjugate points this node stands for;
    ``equation`` is the chart-local strict transform centred at the point.
    """
    index: int
    parent: int | None
    depth: int
    multiplicity: int
    weight: int
    field_degree: int
    equation: str
    children: list[int] = field(default_factory=list)


@dataclass
class BlowupLeaf:
    """A point where the strict transform is smooth and transverse to the last
    exceptional curve; one leaf per branch (times ``weight``)."""
    parent: int | None
    weight: int


@dataclass
class BlowupTree:
    nodes: list[BlowupNode]
    leaves: list[BlowupLeaf]

    @property
    def multiplicities(self) -> list[int]:
        return [n.multiplicity for n in self.nodes]

    @property
    def delta(self) -> int:
        return sum(n.weight * n.multiplicity * (n.multiplicity - 1) // 2 for n in self.nodes)

    @property
    def branches(self) -> int:
        return sum(leaf.weight for leaf in self.leaves)


def _order(P: dict) -> int:
    return min(i + j for i, j in P)


def _fmt(P: dict) -> str:
    if all(isinstance(c, Fraction) for c in P.values()):
        return format_terms(P, ("u", "v"))
    keys = sorted(P, key=lambda e: (-sum(e), -e[0]))
    return " + ".join(f"{P[k]!r}*u^{k[0]}*v^{k[1]}" for k in keys)


def _shift_second(P: dict, a) -> dict:
    """Substitute ``v -> v + a``."""
    out: dict = {}
    for (i, j), c in P.items():
        apow = c * 0 + 1
        for k in range(j, -1, -1):
            key = (i, k)
            out[key] = out.get(key, c * 0) + c * comb(j, k) * apow
            apow = apow * a
    return {k: c for k, c in out.items() if c != 0}


def resolve(f, max_depth: int = MAX_BLOWUP_DEPTH) -> BlowupTree:
    """Embedded resolution of the germ of ``f`` at the origin.

    Each point is blown up in the two standard charts; points on the
    exceptional line are the roots of the tangent cone, factored over the
    current coefficient field.  A simple root means the strict transform is
    smooth and transverse there (a leaf).  A repeated root of degree ``e > 1``
    is handled by adjoining one root and weighting the subtree by ``e``.
    A smooth germ gives an empty tree with a single leaf.
    """
    f = _prepare(f)
    nodes: list[BlowupNode] = []
    leaves: list[BlowupLeaf] = []
    P0 = dict(f.terms)
    if _order(P0) == 1:
        return BlowupTree(nodes, [BlowupLeaf(None, 1)])
    _blow_up(P0, QQ, 1, None, 0, nodes, leaves, max_depth)
    return BlowupTree(nodes, leaves)


def _blow_up(P: dict, K: RationalField | NumberField, weight: int, parent: int | None,
             depth: int, nodes: list, leaves: list, max_depth: int) -> None:
    if depth >= max_depth:
        raise ResolutionDepthExceeded(f"resolution deeper than {max_depth} blow-ups")
    m = _order(P)
    node = BlowupNode(len(nodes), parent, depth, m, weight, K.degree, _fmt(P))
    nodes.append(node)
    if parent is not None:
        nodes[parent].children.append(node.index)

    # chart v -> u*v: tangent cone h(v) = sum c_{m-j, j} v^j, strict transform P1
    h = utrim([P.get((m - j, j), K.zero) for j in range(m + 1)])
    P1 = {(i + j - m, j): c for (i, j), c in P.items()}
    for g, e in K.factor(h):
        deg_g = udeg(g)
        if e == 1:
            leaves.append(BlowupLeaf(node.index, weight * deg_g))
            continue
        if deg_g == 1:
            root, Q, L = -g[0], P1, K
        else:
            L, embed, root = K.extension(g)
            Q = {k: embed(c) for k, c in P1.items()}
        _blow_up(_shift_second(Q, root), L, weight * deg_g, node.index, depth + 1,
                 nodes, leaves, max_depth)

    # the direction u = 0 is only visible in the chart u -> u*v
    at_infinity = m - udeg(h)
    if at_infinity == 1:
        leaves.append(BlowupLeaf(node.index, weight))
    elif at_infinity > 1:
        P2 = {(i, i + j - m): c for (i, j), c in P.items()}
        _blow_up(P2, K, weight, node.index, depth + 1, nodes, leaves, max_depth)


def delta_invariant(f) -> int:
    return resolve(f).delta


def branch_count(f) -> int:
    return resolve(f).branches


# -- classification -------------------------------------------------------

@dataclass(frozen=True)
class GermReport:
    multiplicity: int
    milnor: int
    tjurina: int
    delta: int
    branches: int
    ade: str

    def as_dict(self) -> dict:
        return {"m": self.multiplicity, "mu": self.milnor, "tau": self.tjurina,
                "delta": self.delta, "branches": self.branches, "ade": self.ade}


def _ade_label(m: int, mu: int, r: int) -> str:
    if m <= 1:
        return "Smooth"
    if m == 2:
        return f"A{mu}"
    if m == 3 and mu == 4 and r == 3:
        return "D4"
    return "Other"


def classify(f) -> GermReport:
    f = _prepare(f)
    m = f.order()
    mu = milnor_number(f)
    tau = tjurina_number(f)
    tree = resolve(f)
    return GermReport(m, mu, tau, tree.delta, tree.branches, _ade_label(m, mu, tree.branches))
