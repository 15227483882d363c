"""Exact coefficient fields for the blow-up resolution: Q and simple extensions Q(theta).

Towers are always collapsed to a single simple extension through a primitive
element, so every field in play is ``Q[z]/(q(z))`` for one irreducible ``q``.
Factorisation over Q is delegated to sympy; factorisation over ``Q(theta)``
uses Trager's norm method on top of it.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import count
from typing import Callable, Sequence

import sympy

from .poly import (udeg, udivmod, ugcd, umonic, umul, uderiv, ushift, usquarefree,
                   utrim, uxgcd, uadd)

_Z, _T = sympy.symbols("_z _t")


def _sympy_to_fraction(c) -> Fraction:
    c = sympy.Rational(c)
    return Fraction(int(c.p), int(c.q))


def factor_rational(p: Sequence[Fraction]) -> list[tuple[list[Fraction], int]]:
    """Monic irreducible factors of ``p`` over Q with multiplicities."""
    p = utrim(p)
    if udeg(p) <= 0:
        return []
    P = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(p)],
                   _T, domain="QQ")
    _, facs = P.factor_list()
    out = []
    for g, e in facs:
        coeffs = [_sympy_to_fraction(c) for c in reversed(g.all_coeffs())]
        out.append((umonic(coeffs), int(e)))
    out.sort(key=lambda fe: (len(fe[0]), [(c.numerator, c.denominator) for c in fe[0]], fe[1]))
    return out


def _is_squarefree(p: Sequence) -> bool:
    return udeg(ugcd(p, uderiv(p))) == 0


class RationalField:
    """The prime field Q; elements are plain ``Fraction`` objects."""

    degree = 1
    minpoly = (Fraction(0), Fraction(1))

    def __call__(self, value) -> Fraction:
        return Fraction(value)

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def factor(self, h: Sequence[Fraction]) -> list[tuple[list[Fraction], int]]:
        return factor_rational(h)

    def extension(self, g: Sequence[Fraction]):
        """Adjoin a root of the irreducible ``g``: returns ``(L, embed, root)``."""
        L = NumberField(umonic(g))
        return L, L, L.gen

    def __repr__(self) -> str:
        return "QQ"


QQ = RationalField()


class NFElement:
    __slots__ = ("field", "c")

    def __init__(self, field: "NumberField", coeffs: Sequence[Fraction]):
        self.field = field
        self.c = tuple(coeffs)

    def _lift(self, other):
        if isinstance(other, NFElement):
            if other.field is not self.field:
                raise ValueError("mixing elements of different number fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return NFElement(self.field, tuple(a + b for a, b in zip(self.c, other.c)))

    __radd__ = __add__

    def __neg__(self):
        return NFElement(self.field, tuple(-a for a in self.c))

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return NFElement(self.field, tuple(a - b for a, b in zip(self.c, other.c)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return NFElement(self.field, tuple(a * other for a in self.c))
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.field._reduce(umul(list(self.c), list(other.c)))

    __rmul__ = __mul__

    def inverse(self) -> "NFElement":
        if not self:
            raise ZeroDivisionError("inverse of zero in a number field")
        g, s, _ = uxgcd(utrim(list(self.c)), list(self.field.minpoly))
        assert udeg(g) == 0
        return self.field._reduce(s)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return NFElement(self.field, tuple(a / other for a in self.c))
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        result, base = self.field.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self) -> bool:
        return any(self.c)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.c[0] == other and not any(self.c[1:])
        if isinstance(other, NFElement):
            return other.field is self.field and other.c == self.c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.c)

    def poly(self) -> list[Fraction]:
        """Representative polynomial in the generator, ascending."""
        return utrim(list(self.c))

    def __repr__(self) -> str:
        from .poly import uformat
        return f"[{uformat(self.poly(), 'a')}]"


class NumberField:
    """``Q[z]/(q(z))`` for a monic irreducible ``q`` (ascending coefficients)."""

    def __init__(self, minpoly: Sequence[Fraction]):
        q = umonic([Fraction(c) for c in minpoly])
        if udeg(q) < 1:
            raise ValueError("minimal polynomial must have positive degree")
        self.minpoly = tuple(q)
        self.degree = udeg(q)

    def __repr__(self) -> str:
        from .poly import uformat
        return f"QQ[a]/({uformat(list(self.minpoly), 'a')})"

    def _reduce(self, coeffs: Sequence[Fraction]) -> NFElement:
        r = udivmod(list(coeffs), list(self.minpoly))[1] if len(coeffs) > self.degree else list(coeffs)
        r = list(r) + [Fraction(0)] * (self.degree - len(r))
        return NFElement(self, r)

    def __call__(self, value) -> NFElement:
        if isinstance(value, NFElement):
            if value.field is not self:
                raise ValueError("element of a different field")
            return value
        return NFElement(self, [Fraction(value)] + [Fraction(0)] * (self.degree - 1))

    def from_poly(self, coeffs: Sequence[Fraction]) -> NFElement:
        return self._reduce([Fraction(c) for c in coeffs])

    @property
    def zero(self) -> NFElement:
        return self(0)

    @property
    def one(self) -> NFElement:
        return self(1)

    @property
    def gen(self) -> NFElement:
        if self.degree == 1:
            return self(-self.minpoly[0])
        return NFElement(self, [Fraction(0), Fraction(1)] + [Fraction(0)] * (self.degree - 2))

    # -- norms and factorisation ------------------------------------------

    def _norm_of_shift(self, h: Sequence[NFElement], k: int) -> list[Fraction]:
        """Norm over Q of ``h(t - k*theta)``: ``Res_z(q(z), sum h_i(z) (t - k z)^i)``."""
        expr = 0
        lin = _T - k * _Z
        for i, a in enumerate(h):
            ai = sum(sympy.Rational(c.numerator, c.denominator) * _Z ** j
                     for j, c in enumerate(a.c))
            expr += ai * lin ** i
        q = sum(sympy.Rational(c.numerator, c.denominator) * _Z ** j
                for j, c in enumerate(self.minpoly))
        res = sympy.Poly(q, _Z, _T).resultant(sympy.Poly(sympy.expand(expr), _Z, _T))
        res = sympy.Poly(res, _T)
        return umonic([_sympy_to_fraction(c) for c in reversed(res.all_coeffs())])

    def _embed_rational(self, p: Sequence[Fraction]) -> list[NFElement]:
        return [self(c) for c in p]

    def _factor_squarefree(self, h: list[NFElement]) -> list[list[NFElement]]:
        if udeg(h) == 1:
            return [h]
        theta = self.gen
        for k in _shifts():
            hk = ushift(h, -k * theta)
            norm = self._norm_of_shift(h, k)
            if _is_squarefree(norm):
                break
        pieces = factor_rational(norm)
        if len(pieces) == 1:
            return [h]
        out = []
        for g, _ in pieces:
            gk = ugcd(hk, self._embed_rational(g))
            out.append(umonic(ushift(gk, k * theta)))
        return out

    def factor(self, h: Sequence[NFElement]) -> list[tuple[list[NFElement], int]]:
        """Monic irreducible factors of ``h`` over this field with multiplicities."""
        h = [self(c) for c in utrim(list(h))]
        out = []
        for part, m in usquarefree(h):
            for g in self._factor_squarefree(part):
                out.append((g, m))
        out.sort(key=lambda fe: (len(fe[0]), fe[1], [x.c for x in fe[0]]))
        return out

    def extension(self, g: Sequence[NFElement]):
        """Adjoin a root of the irreducible ``g`` (coefficients in this field).

        Returns ``(L, embed, root)`` where ``L`` is a simple extension of Q,
        ``embed`` maps elements of this field into ``L`` and ``root`` is a root
        of ``embed(g)`` in ``L``.
        """
        g = umonic([self(c) for c in g])
        e = udeg(g)
        for k in _shifts():
            M = self._norm_of_shift(g, k)
            if _is_squarefree(M):
                break
        assert udeg(M) == e * self.degree
        L = NumberField(M)
        gamma = L.gen
        # theta is the common root of q(z) and g(gamma - k z) over L
        lin = [gamma, L(-k)]
        acc: list = []
        power = [L.one]
        for a in g:
            term = umul([L(c) for c in a.c], power)
            acc = uadd(acc, term)
            power = umul(power, lin)
        common = ugcd([L(c) for c in self.minpoly], acc)
        if udeg(common) != 1:
            raise ArithmeticError("primitive element construction failed")
        theta_img = -common[0]

        def embed(a, _L=L, _t=theta_img):
            if isinstance(a, (int, Fraction)):
                return _L(a)
            acc_e = _L.zero
            for c in reversed(a.c):
                acc_e = acc_e * _t + c
            return acc_e

        root = gamma - k * theta_img
        return L, embed, root


def _shifts():
    yield 0
    for k in count(1):
        yield k
        yield -k


Field = RationalField | NumberField
Embedding = Callable[[object], object]
