from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from severi_lab.poly import (BivariatePoly, PolynomialSyntaxError, parse_terms, to_fraction,
                             udivmod, ugcd, umul, uparse, usquarefree, uxgcd, ushift, ueval,
                             uadd, udeg, utrim)

x, y = sympy.symbols("x y")


def test_parse_and_format_roundtrip():
    f = BivariatePoly.parse("y^2 - x^3 + 1/2*x*y")
    assert f.terms[(0, 2)] == 1
    assert f.terms[(3, 0)] == -1
    assert f.terms[(1, 1)] == Fraction(1, 2)
    assert BivariatePoly.parse(str(f)) == f


def test_parse_rejects_garbage():
    for bad in ["y^", "x**2 +", "(x+y)^2", "z^2", "x^2 + 0.5*y"]:
        with pytest.raises(PolynomialSyntaxError):
            BivariatePoly.parse(bad)


def test_to_fraction_rejects_floats():
    assert to_fraction("3/6") == Fraction(1, 2)
    with pytest.raises(TypeError):
        to_fraction(0.5)


def test_parse_matches_sympy():
    text = "3*x^2*y - 7/3*y^4 + x - 2"
    f = BivariatePoly.parse(text)
    g = sympy.Poly(sympy.sympify(text.replace("^", "**")), x, y)
    assert {k: Fraction(int(v.p), int(v.q)) for k, v in g.terms()} == f.terms


def test_derivatives_and_linear_change():
    f = BivariatePoly.parse("y^2 - x^3")
    assert f.diff_x() == BivariatePoly.parse("-3*x^2")
    assert f.diff_y() == BivariatePoly.parse("2*y")
    g = f.linear_change(1, 1, 0, 1)          # x -> x + y
    assert g(Fraction(1), Fraction(2)) == f(Fraction(3), Fraction(2))


small = st.lists(st.integers(-5, 5), min_size=1, max_size=6).map(lambda c: [Fraction(v) for v in c])


@given(small, small)
def test_divmod_identity(a, b):
    if not any(b):
        return
    q, r = udivmod(a, b)
    assert uadd(umul(q, b), r) == utrim(a)
    assert udeg(r) < udeg(b)


@given(small, small)
def test_xgcd_bezout(a, b):
    g, s, t = uxgcd(a, b)
    lhs = [0] * 20
    for p in (umul(s, a), umul(t, b)):
        for i, c in enumerate(p):
            lhs[i] += c
    assert all(u == v for u, v in zip(lhs, list(g) + [0] * 20))


@given(st.lists(st.integers(-3, 3), min_size=1, max_size=3), st.integers(1, 3),
       st.lists(st.integers(-3, 3), min_size=2, max_size=3))
def test_squarefree_reassembles(base, k, other):
    base = [Fraction(v) for v in base] + [Fraction(1)]
    other = [Fraction(v) for v in other] + [Fraction(1)]
    p = umul(other, base)
    for _ in range(k):
        p = umul(p, base)
    prod = [Fraction(1)]
    for fac, m in usquarefree(p):
        for _ in range(m):
            prod = umul(prod, fac)
    lead = p[-1]
    assert [c * lead for c in prod] == p
    sym = sympy.Poly(list(reversed(p)), x).sqf_list()[1]
    assert sorted(m for _, m in sym) == sorted(m for _, m in usquarefree(p))


def test_gcd_and_shift():
    p = uparse("x^3 - x")
    q = uparse("x^2 - 1")
    assert ugcd(p, q) == uparse("x^2 - 1")
    assert ueval(ushift(p, 2), Fraction(1)) == ueval(p, Fraction(3))


def test_parse_terms_univariate():
    assert parse_terms("s^2 - 2*s", ("s",)) == {(2,): 1, (1,): -2}
