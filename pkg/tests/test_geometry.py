from fractions import Fraction as F

import pytest

from mine.geometry import (Drawing, GeneralPositionError, GeometryError,
                           circle_layout, free_radius, list_crossings,
                           make_point, rational_sqrt_lower, segment_intersection,
                           validate_general_position)
from mine.instance import make_instance


def pt(x, y):
    return make_point(x, y)


def _table(k1, k2):
    return tuple(tuple(0 for _ in range(k2)) for _ in range(k1))


def x_instance():
    inst = make_instance({1: 2, 2: 2, 3: 2, 4: 2},
                         pairwise={(1, 3): _table(2, 2), (2, 4): _table(2, 2)})
    d = Drawing({1: pt(0, 0), 2: pt(1, 0), 3: pt(1, 1), 4: pt(0, 1)})
    return inst, d


def test_symmetric_x():
    p = segment_intersection(pt(0, 0), pt(1, 1), pt(0, 1), pt(1, 0))
    assert p == (F(1, 2), F(1, 2))


def test_disjoint_collinear_none():
    assert segment_intersection(pt(0, 0), pt(1, 0), pt(2, 0), pt(3, 0)) is None


def test_endpoint_touch_not_proper():
    assert segment_intersection(pt(0, 0), pt(2, 2), pt(1, 1), pt(3, 0)) is None


def test_collinear_overlap_rejected():
    with pytest.raises(GeneralPositionError):
        segment_intersection(pt(0, 0), pt(2, 0), pt(1, 0), pt(3, 0))


def test_intersection_symmetric_in_arguments():
    args = (pt(0, 0), pt(3, 1), pt(0, 1), pt(3, 0))
    assert segment_intersection(*args) == segment_intersection(args[2], args[3], args[0], args[1])


def test_intersection_point_lies_on_both_segments():
    # asymmetric crossing: the point must interpolate both segments exactly
    p1, p2 = pt(0, 0), pt(7, 3)
    p3, p4 = pt(1, 4), pt(5, -2)
    q = segment_intersection(p1, p2, p3, p4)
    assert q is not None
    (x, y) = q
    assert (x - p1[0]) * (p2[1] - p1[1]) == (y - p1[1]) * (p2[0] - p1[0])
    assert (x - p3[0]) * (p4[1] - p3[1]) == (y - p3[1]) * (p4[0] - p3[0])
    assert min(p1[0], p2[0]) < x < max(p1[0], p2[0])
    assert min(p3[0], p4[0]) < x < max(p3[0], p4[0])


def test_x_drawing_one_crossing():
    inst, d = x_instance()
    cs = list_crossings(inst, d)
    assert len(cs) == 1
    assert cs[0].point == (F(1, 2), F(1, 2))


def test_path_has_no_crossings():
    inst = make_instance({0: 2, 1: 2, 2: 2},
                         pairwise={(0, 1): _table(2, 2), (1, 2): _table(2, 2)})
    d = Drawing({0: pt(0, 0), 1: pt(1, 0), 2: pt(2, 1)})
    assert list_crossings(inst, d) == []


def test_k4_one_crossing_pair():
    pw = {(a, b): _table(2, 2) for a in range(4) for b in range(a + 1, 4)}
    inst = make_instance({u: 2 for u in range(4)}, pairwise=pw)
    d = Drawing({0: pt(0, 0), 1: pt(2, 0), 2: pt(2, 2), 3: pt(0, 2)})
    cs = list_crossings(inst, d)
    assert len(cs) == 1
    assert {cs[0].edge_a, cs[0].edge_b} == {(0, 2), (1, 3)}


def test_crossings_invariant_under_translation_scaling():
    inst, d = x_instance()
    moved = Drawing({u: (3 * p[0] + 7, 3 * p[1] - 2) for u, p in d.coords.items()})
    assert len(list_crossings(inst, moved)) == len(list_crossings(inst, d))


def test_general_position_ok_for_x():
    inst, d = x_instance()
    assert validate_general_position(inst, d) == []


def test_three_concurrent_diagonals():
    pw = {(0, 1): _table(2, 2), (2, 3): _table(2, 2), (4, 5): _table(2, 2)}
    inst = make_instance({u: 2 for u in range(6)}, pairwise=pw)
    d = Drawing({0: pt(-1, 0), 1: pt(1, 0), 2: pt(0, -1), 3: pt(0, 1),
                 4: pt(-1, -1), 5: pt(1, 1)})
    kinds = [v.kind for v in validate_general_position(inst, d)]
    assert "concurrent-edges" in kinds


def test_node_on_edge_violation():
    inst = make_instance({0: 2, 1: 2, 2: 2}, pairwise={(0, 1): _table(2, 2)})
    d = Drawing({0: pt(0, 0), 1: pt(2, 0), 2: pt(1, 0)})
    kinds = [v.kind for v in validate_general_position(inst, d)]
    assert kinds == ["node-on-edge"]


def test_free_radius_x_center():
    inst, d = x_instance()
    r = free_radius(inst, d, (F(1, 2), F(1, 2)), exclude={(1, 3), (2, 4)})
    assert r >= F(1, 4)
    # half the true nearest-node distance sqrt(1/2) is an upper bound
    assert r * r <= F(1, 2) / 4


def test_free_radius_midpoint_of_excluded_edge():
    inst = make_instance({0: 2, 1: 2}, pairwise={(0, 1): _table(2, 2)})
    d = Drawing({0: pt(0, 0), 1: pt(2, 0)})
    r = free_radius(inst, d, pt(1, 0), exclude={(0, 1)})
    assert r == F(1, 2)


def test_free_radius_empty_drawing_rejected():
    inst = make_instance({})
    d = Drawing({})
    with pytest.raises(GeometryError):
        free_radius(inst, d, pt(0, 0))


def test_rational_sqrt_lower_bounds():
    for v in (F(2), F(1, 2), F(9), F(7, 5)):
        r = rational_sqrt_lower(v)
        assert r > 0
        assert r * r <= v
        assert (r + F(1, 2**20)) ** 2 > v  # tight to ~2^-20
    assert rational_sqrt_lower(F(0)) == 0


def test_circle_layout_distinct_points_on_circle():
    d = circle_layout(range(6))
    assert len(set(d.coords.values())) == 6
    for (x, y) in d.coords.values():
        assert x * x + y * y == 1
