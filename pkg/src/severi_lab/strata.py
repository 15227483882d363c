"""Dimension counts for Severi-type strata on P^2, K3 and Hirzebruch surfaces.

All quantities are integer formulas; ``expected_dim`` is allowed to go negative
(negative means "expected empty").
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import comb


class InvalidSpec(ValueError):
    pass


class PositivityWarning(UserWarning):
    """Hirzebruch class with ``b < a*n``: the dimension formula assumes b >> 0."""


@dataclass(frozen=True)
class P2:
    d: int

    def validate(self) -> None:
        if not isinstance(self.d, int) or self.d < 1:
            raise InvalidSpec(f"P2 needs d >= 1, got {self.d!r}")


@dataclass(frozen=True)
class K3:
    g: int

    def validate(self) -> None:
        if not isinstance(self.g, int) or self.g < 2:
            raise InvalidSpec(f"K3 needs g >= 2, got {self.g!r}")


@dataclass(frozen=True)
class Hirzebruch:
    """Class ``a E + b F`` on ``F_n``; ``E^2 = -n``, ``E.F = 1``, ``F^2 = 0``."""
    n: int
    a: int
    b: int

    def validate(self) -> None:
        if not all(isinstance(v, int) for v in (self.n, self.a, self.b)):
            raise InvalidSpec("Hirzebruch parameters must be integers")
        if self.n < 0:
            raise InvalidSpec(f"Hirzebruch needs n >= 0, got {self.n}")
        if self.a < 1:
            raise InvalidSpec(f"Hirzebruch needs a >= 1, got {self.a}")
        if self.b < self.a * self.n:
            warnings.warn(f"b={self.b} < a*n={self.a * self.n}: dimension formula "
                          "assumes b sufficiently large", PositivityWarning, stacklevel=3)

    def intersect(self, c1: tuple[int, int], c2: tuple[int, int]) -> int:
        (a1, b1), (a2, b2) = c1, c2
        return -self.n * a1 * a2 + a1 * b2 + b1 * a2

    @property
    def canonical(self) -> tuple[int, int]:
        return (-2, -(self.n + 2))


SurfaceSpec = P2 | K3 | Hirzebruch


@dataclass(frozen=True)
class StrataQuery:
    delta: int = 0
    kappa: int = 0

    def __post_init__(self):
        if self.delta < 0 or self.kappa < 0:
            raise InvalidSpec("node and cusp counts must be nonnegative")


def _check(s) -> None:
    if not isinstance(s, (P2, K3, Hirzebruch)):
        raise InvalidSpec(f"unknown surface {s!r}")
    s.validate()


def linear_system_dim(s: SurfaceSpec) -> int:
    _check(s)
    if isinstance(s, P2):
        return comb(s.d + 2, 2) - 1
    if isinstance(s, K3):
        return s.g
    n, a, b = s.n, s.a, s.b
    return (a + 1) * (b + 1) - a * (a + 1) * n // 2 - 1


def arithmetic_genus(s: SurfaceSpec) -> int:
    _check(s)
    if isinstance(s, P2):
        return (s.d - 1) * (s.d - 2) // 2
    if isinstance(s, K3):
        return s.g
    L = (s.a, s.b)
    K = s.canonical
    LL = s.intersect(L, L) + s.intersect(L, K)
    # adjunction: L.(L+K) is always even
    return LL // 2 + 1


def conditions_imposed(q: StrataQuery) -> int:
    return q.delta + 2 * q.kappa


def expected_dim(s: SurfaceSpec, q: StrataQuery) -> int:
    return linear_system_dim(s) - conditions_imposed(q)


def max_cusps(s: SurfaceSpec) -> int:
    return min(linear_system_dim(s) // 2, arithmetic_genus(s))


def binding_bound(s: SurfaceSpec) -> str:
    by_dim, by_genus = linear_system_dim(s) // 2, arithmetic_genus(s)
    if by_dim == by_genus:
        return "both"
    return "dimension" if by_dim < by_genus else "genus"


def nonempty_expected(s: SurfaceSpec, q: StrataQuery) -> bool:
    return (expected_dim(s, q) >= 0 and q.kappa <= max_cusps(s)
            and q.delta + q.kappa <= arithmetic_genus(s))


def summary(s: SurfaceSpec, q: StrataQuery) -> dict:
    """Everything the ``strata expdim`` command reports, in output order."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", PositivityWarning)
        return {
            "dim": linear_system_dim(s),
            "genus": arithmetic_genus(s),
            "expdim": expected_dim(s, q),
            "max_cusps": max_cusps(s),
            "nonempty_expected": nonempty_expected(s, q),
            "binding_bound": binding_bound(s),
        }
