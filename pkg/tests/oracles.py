"""Independent oracles shared by the unit and acceptance tests."""
from severi_lab.tropical import DEGREE_DIRECTIONS


def tropical_line_vertex(p, q):
    """Vertex of the unique tropical line through two generic points, by
    trying every assignment of the points to the line's three rays."""
    found = set()
    for u in DEGREE_DIRECTIONS:
        for w in DEGREE_DIRECTIONS:
            # v = p - s u = q - t w with s, t >= 0
            a, b, c, d = u[0], -w[0], u[1], -w[1]
            det = a * d - b * c
            if det == 0:
                continue
            rx, ry = p[0] - q[0], p[1] - q[1]
            s = (rx * d - b * ry) / det
            t = (a * ry - c * rx) / det
            if s >= 0 and t >= 0:
                found.add((p[0] - s * u[0], p[1] - s * u[1]))
    assert len(found) == 1
    return found.pop()


def line_pair_vertex_sets(points):
    """Vertex sets of all unions of two tropical lines through four points,
    one set per pairing of the points."""
    assert len(points) == 4
    first, rest = points[0], points[1:]
    out = set()
    for k in range(3):
        others = [p for i, p in enumerate(rest) if i != k]
        out.add(frozenset([tropical_line_vertex(first, rest[k]),
                           tropical_line_vertex(*others)]))
    return out
