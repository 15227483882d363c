import pytest
import sympy
from hypothesis import given, settings, strategies as st

from severi_lab.germ import (NonIsolated, NotThroughOrigin, branch_count, classify,
                             delta_invariant, milnor_number, multiplicity, resolve,
                             tjurina_number)
from severi_lab.poly import BivariatePoly, ZeroPolynomial

X, Y = sympy.symbols("x y")

NODE = "y^2 - x^2"
CUSP = "y^2 - x^3"
TACNODE = "y^2 - x^4"
D4 = "x^2*y + x*y^2"


def global_milnor(text):
    """dim Q[x,y]/(f_x, f_y) from a Groebner basis; equals the local Milnor
    number when the origin is the only critical point."""
    f = sympy.sympify(text.replace("^", "**"))
    G = sympy.groebner([sympy.diff(f, X), sympy.diff(f, Y)], X, Y, order="grevlex")
    leads = [sympy.Poly(g, X, Y).monoms(order="grevlex")[0] for g in G.exprs]
    count, bound = 0, 40
    for i in range(bound):
        for j in range(bound):
            if not any(i >= a and j >= b for a, b in leads):
                count += 1
    assert count < bound  # finite quotient
    return count


def test_multiplicity_examples():
    assert multiplicity(CUSP) == 2
    assert multiplicity("x") == 1
    assert multiplicity(D4) == 3
    with pytest.raises(ZeroPolynomial):
        multiplicity(BivariatePoly())


def test_milnor_tjurina_examples():
    assert milnor_number(NODE) == 1
    assert milnor_number(CUSP) == 2
    assert milnor_number(TACNODE) == 3
    assert tjurina_number(NODE) == 1
    assert tjurina_number(CUSP) == 2
    assert tjurina_number("y^2 - x^5") == 4


@pytest.mark.parametrize("text", [NODE, CUSP, TACNODE, D4, "y^2 - x^7", "x^3 + y^4",
                                  "x^3 + y^5", "x^2*y + y^5", "x^4 + y^4"])
def test_milnor_against_groebner_oracle(text):
    assert milnor_number(text) == global_milnor(text)


def test_tjurina_below_milnor_for_non_quasihomogeneous():
    f = "x^4 + y^5 + x^2*y^3"
    assert tjurina_number(f) < milnor_number(f) == 12


def test_resolution_trees():
    assert resolve(CUSP).multiplicities == [2, 1]
    assert resolve(TACNODE).multiplicities == [2, 2]
    smooth = resolve("y - x^2")
    assert smooth.nodes == [] and smooth.branches == 1


def test_delta_and_branches():
    assert [delta_invariant(f) for f in (NODE, CUSP, TACNODE, D4)] == [1, 1, 2, 3]
    assert [branch_count(f) for f in (NODE, CUSP, D4)] == [2, 1, 3]


def test_irrational_tangents_count_as_conjugate_branches():
    # y^2 - 2x^2 splits only over Q(sqrt 2)
    r = classify("y^2 - 2*x^2")
    assert (r.delta, r.branches) == (1, 2)
    # (y^2 - 2x^2)^2 + x^6: a tacnode along each of two conjugate tangents
    r = classify("y^4 - 4*x^2*y^2 + 4*x^4 + x^6")
    assert (r.milnor, r.delta, r.branches) == (13, 8, 4)


def test_classify_table():
    assert classify(NODE).as_dict() == {"m": 2, "mu": 1, "tau": 1, "delta": 1,
                                         "branches": 2, "ade": "A1"}
    assert classify(CUSP).as_dict() == {"m": 2, "mu": 2, "tau": 2, "delta": 1,
                                         "branches": 1, "ade": "A2"}
    assert classify(TACNODE).as_dict() == {"m": 2, "mu": 3, "tau": 3, "delta": 2,
                                            "branches": 2, "ade": "A3"}
    assert classify(D4).ade == "D4"


def test_errors():
    with pytest.raises(NonIsolated):
        classify("x^2*y^2")
    with pytest.raises(NonIsolated):
        milnor_number("y^2")
    with pytest.raises(NotThroughOrigin):
        classify("1 + x")


@pytest.mark.parametrize("k", range(1, 9))
def test_ak_series(k):
    r = classify(f"y^2 - x^{k + 1}")
    assert (r.milnor, r.tjurina) == (k, k)
    assert r.delta == (k + 1) // 2
    assert r.branches == (2 if k % 2 else 1)
    assert r.milnor == 2 * r.delta - r.branches + 1


elementary = st.sampled_from([(1, 1, 0, 1), (1, -1, 0, 1), (1, 0, 1, 1), (1, 0, -1, 1),
                              (0, 1, 1, 0), (-1, 0, 0, 1), (1, 2, 0, 1), (1, 0, 2, 1)])


def compose(ms):
    a, b, c, d = 1, 0, 0, 1
    for (p, q, r, s) in ms:
        a, b, c, d = a * p + b * r, a * q + b * s, c * p + d * r, c * q + d * s
    return a, b, c, d


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([NODE, CUSP, TACNODE, D4, "y^2 - x^5", "x^3 + y^4"]),
       st.lists(elementary, min_size=1, max_size=4))
def test_invariance_under_unimodular_change(text, ms):
    a, b, c, d = compose(ms)
    assert abs(a * d - b * c) == 1
    f = BivariatePoly.parse(text)
    g = f.linear_change(a, b, c, d)
    assert classify(g) == classify(f)
