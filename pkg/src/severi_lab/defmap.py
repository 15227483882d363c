"""Rational matrix model of the global-to-local map H^0(N) -> (+)_p T^{1,es}_p.

Rows are indexed by singular points (one row per equisingular direction),
columns by a basis of the global section space.  The cohomology itself is not
computed: the matrix is the input.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Sequence

from .poly import to_fraction


class ShapeMismatch(ValueError):
    pass


class Unrealizable(ValueError):
    """No global section maps onto the requested local directions."""


class UnsupportedBudget(ValueError):
    pass


class SingularityKind(str, Enum):
    CURVE_NODE_ON_SURFACE = "node_surface"
    CUSP_ON_SURFACE = "cusp_surface"
    CURVE_NODE_IN_THREEFOLD = "node_threefold"
    SURFACE_ODP = "odp_surface"


# kind -> (dim T^1, dim T^{1,es})
_BUDGETS = {
    SingularityKind.CURVE_NODE_ON_SURFACE: (1, 1),
    SingularityKind.CUSP_ON_SURFACE: (2, 1),
    SingularityKind.CURVE_NODE_IN_THREEFOLD: (1, 1),
    SingularityKind.SURFACE_ODP: (1, 1),
}


@dataclass(frozen=True)
class SingularityBudget:
    kind: SingularityKind
    t1_dim: int
    es_dim: int

    @classmethod
    def of(cls, kind) -> "SingularityBudget":
        try:
            kind = SingularityKind(kind)
        except ValueError:
            names = ", ".join(k.value for k in SingularityKind)
            raise ValueError(
                f"unknown singularity kind {kind!r}; expected one of {names}") from None
        t1, es = _BUDGETS[kind]
        return cls(kind, t1, es)


@dataclass(frozen=True)
class DeformationMap:
    matrix: tuple[tuple[Fraction, ...], ...]
    budgets: tuple[SingularityBudget, ...]
    columns: int

    @classmethod
    def build(cls, matrix: Sequence[Sequence], budgets: Sequence = (),
              columns: int | None = None) -> "DeformationMap":
        """``budgets`` may hold SingularityBudget objects or kind names.  An
        empty budget list means "one anonymous row per point" and skips the
        row-count check."""
        rows = tuple(tuple(to_fraction(v) for v in row) for row in matrix)
        widths = {len(r) for r in rows}
        if len(widths) > 1:
            raise ShapeMismatch(f"ragged matrix, row lengths {sorted(widths)}")
        ncols = widths.pop() if widths else (columns or 0)
        if columns is not None and ncols != columns:
            raise ShapeMismatch(f"matrix has {ncols} columns, expected {columns}")
        bud = tuple(b if isinstance(b, SingularityBudget) else SingularityBudget.of(b)
                    for b in budgets)
        if bud and sum(b.es_dim for b in bud) != len(rows):
            raise ShapeMismatch(
                f"{len(rows)} rows but budgets carry {sum(b.es_dim for b in bud)} "
                "equisingular directions")
        return cls(rows, bud, ncols)

    @property
    def rows(self) -> int:
        return len(self.matrix)


def _pivot_row(M: list[list[Fraction]], col: int, start: int) -> int | None:
    # largest |value| among the nonzero candidates; first index breaks ties
    best, best_val = None, Fraction(0)
    for r in range(start, len(M)):
        v = abs(M[r][col])
        if v > best_val:
            best, best_val = r, v
    return best


def row_echelon(matrix: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns ``(R, pivot_columns)``."""
    M = [list(r) for r in matrix]
    ncols = len(M[0]) if M else 0
    pivots = []
    r = 0
    for c in range(ncols):
        p = _pivot_row(M, c, r)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [v * inv for v in M[r]]
        for k in range(len(M)):
            if k != r and M[k][c]:
                f = M[k][c]
                M[k] = [a - f * b for a, b in zip(M[k], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M, pivots


def rank_echelon(matrix: Sequence[Sequence]) -> int:
    return len(row_echelon([[to_fraction(v) for v in r] for r in matrix])[1])


def rank_bareiss(matrix: Sequence[Sequence]) -> int:
    """Fraction-free Bareiss elimination on an integer-scaled copy."""
    rows = [[to_fraction(v) for v in r] for r in matrix]
    if not rows or not rows[0]:
        return 0
    M = []
    for r in rows:
        den = 1
        for v in r:
            den = den * v.denominator // gcd(den, v.denominator)
        M.append([int(v * den) for v in r])
    n, m = len(M), len(M[0])
    prev = 1
    rank = 0
    for c in range(m):
        p = next((i for i in range(rank, n) if M[i][c] != 0), None)
        if p is None:
            continue
        M[rank], M[p] = M[p], M[rank]
        piv = M[rank][c]
        for i in range(rank + 1, n):
            for j in range(c + 1, m):
                M[i][j] = (piv * M[i][j] - M[i][c] * M[rank][j]) // prev
            M[i][c] = 0
        prev = piv
        rank += 1
        if rank == n:
            break
    return rank


def image_dimension(M: DeformationMap) -> int:
    return rank_echelon(M.matrix)


def realizable(M: DeformationMap, target: Sequence) -> tuple[Fraction, ...]:
    """A global section ``xi`` with ``M xi = target``; raises Unrealizable."""
    t = [to_fraction(v) for v in target]
    if len(t) != M.rows:
        raise ShapeMismatch(f"target has length {len(t)}, map has {M.rows} rows")
    aug = [list(row) + [tv] for row, tv in zip(M.matrix, t)]
    R, pivots = row_echelon(aug)
    if M.columns in pivots:
        raise Unrealizable("target is not in the image of the deformation map")
    xi = [Fraction(0)] * M.columns
    for r, c in enumerate(pivots):
        xi[c] = R[r][-1]
    for row, tv in zip(M.matrix, t):
        if sum((a * x for a, x in zip(row, xi)), Fraction(0)) != tv:
            raise ArithmeticError("back-substitution failed to verify")
    return tuple(xi)


def max_singular_count(M: DeformationMap) -> int:
    for b in M.budgets:
        if b.es_dim != 1:
            raise UnsupportedBudget(f"{b.kind.value} has es_dim={b.es_dim}, expected 1")
    return image_dimension(M)


def codim_budget(budgets: Sequence) -> int:
    return sum((b if isinstance(b, SingularityBudget) else SingularityBudget.of(b)).t1_dim
               for b in budgets)
