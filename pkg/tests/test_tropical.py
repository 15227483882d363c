from fractions import Fraction
from itertools import combinations

import pytest

from oracles import line_pair_vertex_sets

from severi_lab.tropical import (DEGREE_DIRECTIONS, EPSILON, InvalidEdge,
                                 NonPositiveValuation, OutOfRange, Ray, TropicalCurve,
                                 check_balancing, check_degree, check_geometry, contract_edges,
                                 cusp_signature, enumerate_curves, floor_diagrams, is_trivalent,
                                 node_edge_length, point_configuration, severi_degree,
                                 severi_degree_floor)


def line(at=(0, 0), w=1, dirs=DEGREE_DIRECTIONS):
    return TropicalCurve([tuple(Fraction(v) for v in at)], [], [Ray(0, u, w) for u in dirs])


def test_balancing_examples():
    assert check_balancing(line())
    assert not check_balancing(line(dirs=((-1, 0), (0, -1), (1, 0))))
    assert check_balancing(line(w=2))
    assert check_degree(line(w=2), 2) and not check_degree(line(), 2)


def cubic_piece():
    return enumerate_curves(3, 0).curves[0].curve


def test_contract_examples():
    c = cubic_piece()
    assert is_trivalent(c)
    one = contract_edges(c, [0])
    assert one.merged_valences == [4] and one.balanced
    # find two edges sharing an endpoint
    pair = next((i, j) for i, j in combinations(range(len(c.edges)), 2)
                if set(c.edges[i].v) & set(c.edges[j].v))
    two = contract_edges(c, list(pair))
    assert two.merged_valences == [5] and two.balanced
    same = contract_edges(c, [])
    assert same.curve == c


def test_contraction_preserves_degree():
    for rec in enumerate_curves(3, 1).curves:
        c = rec.curve
        for k in range(len(c.edges)):
            con = contract_edges(c, [k])
            assert con.balanced
            assert con.curve.ray_multiset() == c.ray_multiset()


def test_edge_refs():
    c = cubic_piece()
    assert contract_edges(c, ["e0"]).contracted == (0,)
    with pytest.raises(InvalidEdge):
        contract_edges(c, [len(c.edges)])
    with pytest.raises(InvalidEdge):
        contract_edges(c, ["x1"])
    with pytest.raises(InvalidEdge):
        contract_edges(c, [0, 0])


def test_cusp_signature():
    c = cubic_piece()
    assert len(c.edges) >= 3
    one = cusp_signature(c, [0])
    assert (one.codimension, one.cusp_candidate, one.warning) == (1, False, None)
    two = cusp_signature(c, [0, 1])
    assert (two.codimension, two.cusp_candidate, two.warning) == (2, True, None)
    three = cusp_signature(c, [0, 1, 2])
    assert three.codimension == 3 and three.cusp_candidate and three.warning
    with pytest.raises(InvalidEdge):
        cusp_signature(c, [])


def test_node_edge_length():
    assert node_edge_length(3) == 3
    assert node_edge_length(0) == 0
    assert node_edge_length("1/2") == Fraction(1, 2)
    with pytest.raises(NonPositiveValuation):
        node_edge_length(-1)


def test_json_roundtrip():
    for rec in enumerate_curves(3, 2).curves:
        c = rec.curve
        assert TropicalCurve.from_json(c.to_json()) == c


def test_small_counts():
    assert severi_degree(1, 0) == 1
    assert severi_degree(2, 1) == 3
    assert severi_degree(3, 1) == 12
    assert [severi_degree_floor(*a) for a in [(1, 0), (2, 1), (3, 0)]] == [1, 3, 1]


def test_impossible_node_counts_give_zero():
    assert severi_degree(1, 1) == 0
    assert severi_degree(2, 2) == 0
    assert severi_degree_floor(2, 2) == 0


def test_out_of_range():
    for args in [(0, 0), (5, 0), (3, -1)]:
        with pytest.raises(OutOfRange):
            enumerate_curves(*args)
        with pytest.raises(OutOfRange):
            severi_degree_floor(*args)


def test_point_configuration_on_one_line():
    pts = point_configuration(5)
    assert all(y == -EPSILON * x for x, y in pts)
    assert EPSILON.denominator > 16


@pytest.mark.parametrize("d,delta", [(1, 0), (2, 0), (2, 1), (3, 0), (3, 1), (3, 2), (3, 3),
                                     (4, 0), (4, 1), (4, 2)])
def test_dual_algorithms_agree(d, delta):
    assert severi_degree(d, delta) == severi_degree_floor(d, delta)


@pytest.mark.parametrize("d,delta", [(2, 1), (3, 1), (3, 2), (3, 3), (4, 1)])
def test_curves_trivalent_balanced_with_right_genus(d, delta):
    res = enumerate_curves(d, delta)
    pa = (d - 1) * (d - 2) // 2
    assert res.point_count == (d + 2) * (d + 1) // 2 - 1 - delta
    for rec in res.curves:
        c = rec.curve
        assert check_balancing(c) and check_degree(c, d) and check_geometry(c)
        assert is_trivalent(c)
        assert rec.genus(d) == pa - delta
        tri_mult = 1
        for t in rec.triangles:
            (a, b, cc) = t.vertices
            tri_mult *= abs((b[0] - a[0]) * (cc[1] - a[1]) - (b[1] - a[1]) * (cc[0] - a[0]))
        assert rec.multiplicity == tri_mult


def test_curves_pass_through_points():
    res = enumerate_curves(3, 1)
    for rec in res.curves:
        c = rec.curve
        for p in res.points:
            assert any(on_segment(c, e, p) for e in c.edges) or any(
                on_ray(c, r, p) for r in c.rays)


def on_segment(c, e, p):
    (x0, y0) = c.vertices[e.v[0]]
    t = (p[0] - x0) / e.direction[0] if e.direction[0] else (p[1] - y0) / e.direction[1]
    return 0 < t < e.length and (x0 + t * e.direction[0], y0 + t * e.direction[1]) == p


def on_ray(c, r, p):
    (x0, y0) = c.vertices[r.v]
    t = (p[0] - x0) / r.direction[0] if r.direction[0] else (p[1] - y0) / r.direction[1]
    return t > 0 and (x0 + t * r.direction[0], y0 + t * r.direction[1]) == p


def test_conics_with_one_node_are_line_pairs():
    res = enumerate_curves(2, 1)
    oracle = line_pair_vertex_sets(res.points)
    assert len(oracle) == 3
    assert {frozenset(rec.curve.vertices) for rec in res.curves} == oracle
    assert sum(rec.multiplicity for rec in res.curves) == len(oracle)


def test_enumeration_is_deterministic():
    a = [r.as_dict() for r in enumerate_curves(3, 2).curves]
    b = [r.as_dict() for r in enumerate_curves(3, 2).curves]
    assert a == b


def test_floor_diagram_records():
    diagrams = floor_diagrams(3, 1)
    assert sum(f.contribution for f in diagrams) == 12
    for f in diagrams:
        assert all(i < j for i, j, _ in f.edges)
        assert all(f.divergence(v) <= 1 for v in range(1, 4))
        assert len(f.edges) == 3 - 1 + 1 - 1
