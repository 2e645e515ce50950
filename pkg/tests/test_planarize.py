import random
from fractions import Fraction as F

import pytest

from mine.costs import INF, is_finite
from mine.geometry import Drawing, list_crossings
from mine.instance import InstanceError, evaluate, make_instance
from mine.reductions.planar import (AUX_PER_CROSSING, planar_sigma, planarize,
                                    replace_crossing)
from mine.reductions.trace import ReductionTrace, trace_from_json
from mine.solvers import solve_brute_force, solve_elimination


def rand_table(rng, k=3):
    return tuple(tuple(rng.randint(0, 6) for _ in range(k)) for _ in range(k))


def x_instance(seed=0):
    rng = random.Random(seed)
    inst = make_instance({u: 3 for u in range(4)},
                         {u: tuple(rng.randint(0, 6) for _ in range(3)) for u in range(4)},
                         {(0, 1): rand_table(rng), (2, 3): rand_table(rng)})
    d = Drawing({0: (F(-2), F(0)), 1: (F(2), F(0)),
                 2: (F(0), F(-2)), 3: (F(0), F(2))})
    return inst, d


def two_x_instance(seed=1):
    rng = random.Random(seed)
    pw = {(0, 1): rand_table(rng), (2, 3): rand_table(rng),
          (4, 5): rand_table(rng), (6, 7): rand_table(rng)}
    inst = make_instance({u: 3 for u in range(8)},
                         {u: tuple(rng.randint(0, 6) for _ in range(3)) for u in range(8)},
                         pw)
    d = Drawing({0: (F(-2), F(0)), 1: (F(2), F(0)), 2: (F(0), F(-2)), 3: (F(0), F(2)),
                 4: (F(8), F(0)), 5: (F(12), F(0)), 6: (F(10), F(-2)), 7: (F(10), F(2))})
    return inst, d


def test_one_crossing_node_count_and_planarity():
    inst, d = x_instance()
    out, od, trace = planarize(inst, d)
    assert len(out.nodes) == 4 + AUX_PER_CROSSING
    assert list_crossings(out, od) == []
    assert len(trace.crossings) == 1
    assert set(trace.original_nodes) | set(trace.aux_nodes) == set(out.nodes)


def test_one_crossing_optimum_preserved():
    inst, d = x_instance()
    out, od, trace = planarize(inst, d)
    b = solve_brute_force(inst)
    e = solve_elimination(out)
    assert b.value == e.value
    restriction = planar_sigma(inst, trace, e.labeling)
    assert evaluate(inst, restriction) == b.value


def test_two_disjoint_crossings():
    inst, d = two_x_instance()
    out, od, trace = planarize(inst, d)
    assert len(trace.aux_nodes) == 2 * AUX_PER_CROSSING
    assert list_crossings(out, od) == []
    assert solve_brute_force(inst).value == solve_elimination(out).value


def test_already_planar_is_identity():
    rng = random.Random(9)
    inst = make_instance({0: 3, 1: 3}, pairwise={(0, 1): rand_table(rng)})
    d = Drawing({0: (F(0), F(0)), 1: (F(1), F(0))})
    out, od, trace = planarize(inst, d)
    assert out is inst
    assert od is d
    assert trace.aux_nodes == ()


def test_planarize_rejects_non_3label():
    inst = make_instance({0: 2, 1: 2}, pairwise={(0, 1): ((0, 0), (0, 0))})
    d = Drawing({0: (F(0), F(0)), 1: (F(1), F(0))})
    with pytest.raises(InstanceError):
        planarize(inst, d)


def test_planarize_rejects_degenerate_drawing():
    inst = make_instance({u: 3 for u in range(3)},
                         pairwise={(0, 1): rand_table(random.Random(0))})
    d = Drawing({0: (F(0), F(0)), 1: (F(2), F(0)), 2: (F(1), F(0))})  # node on edge
    with pytest.raises(Exception):
        planarize(inst, d)


def test_gadget_region_preserves_labeling_energies():
    # every labeling of the original nodes keeps its energy once the
    # auxiliaries are minimized over
    inst, d = x_instance(seed=4)
    out, od, trace = planarize(inst, d)
    for a in range(3):
        for b in range(3):
            x = {0: a, 1: b, 2: 1, 3: 2}
            pinned = _pin(out, x)
            assert solve_elimination(pinned).value == evaluate(inst, x)


def _pin(instance, partial):
    """Clamp the original nodes by +INF unary entries on other labels."""
    unary = dict(instance.unary)
    for u, lab in partial.items():
        unary[u] = tuple(c if i == lab else INF
                         for i, c in enumerate(instance.unary[u]))
    return make_instance(dict(instance.labels), unary,
                         {e: instance.pairwise[e] for e in instance.edges},
                         instance.constant)


def test_replace_crossing_requires_current_crossing():
    inst, d = x_instance()
    trace = ReductionTrace(kind="planarize", original_nodes=inst.nodes,
                           aux_nodes=(), next_fresh_id=4)
    from mine.geometry import Crossing
    stale = Crossing((0, 1), (2, 3), (F(1), F(1)))
    with pytest.raises(Exception):
        replace_crossing(inst, d, trace, stale)


def test_sigma_infinite_restriction_falls_back():
    inst = make_instance({0: 3, 1: 3}, {0: (0, INF, 0), 1: (0, 0, 0)},
                         {(0, 1): rand_table(random.Random(2))})
    trace = ReductionTrace(kind="planarize", original_nodes=(0, 1), aux_nodes=())
    assert planar_sigma(inst, trace, {0: 1, 1: 0}) == {0: 0, 1: 0}
    assert planar_sigma(inst, trace, {0: 2, 1: 1}) == {0: 2, 1: 1}


def test_trace_round_trips_through_json():
    inst, d = x_instance()
    _, _, trace = planarize(inst, d)
    back = trace_from_json(trace.to_json())
    assert back == trace
