"""Crossing removal for 3-label instances drawn in the plane.

Each proper crossing of edges (u, v) and (s, t) is replaced by a planar
assembly: copy nodes v', v'' on the (u, v) line and t', t'' on the (s, t)
line, a SPLIT on each copy breaking its 3-label value into two Boolean
channels, and four UNCROSSCOPY crossovers letting the two horizontal
channel wires pass the two vertical ones.  The original interaction f_uv
moves to edge (u, v'), equality ties v'' to v, and the channel wires force
v' = v'' (likewise for t).  Everything new lives strictly inside a disk of
exact-rational free radius around the crossing point, so no other edge or
crossing is disturbed.

The assembly adds 24 auxiliary nodes per crossing: 4 copies, 8 channel
halves, 4 wire junctions, and 8 crossover internals.  (A tighter wiring
with two fewer nodes exists but shares channel nodes between gadgets in a
way the fixed template cannot draw without new crossings; the per-crossing
constant is exposed as AUX_PER_CROSSING and asserted in tests.)
"""

from __future__ import annotations

from fractions import Fraction

from ..geometry import (Crossing, Drawing, GeometryError, Point, free_radius,
                        list_crossings, segment_intersection,
                        validate_general_position)
from ..instance import EnergyInstance, InstanceError, Labeling, evaluate, is_finite
from .gadgets import (GadgetFragment, equality3, merge_fragments, split_gadget,
                      uncross_copy_gadget)
from .trace import CrossingRecord, ReductionTrace

AUX_PER_CROSSING = 24


class PlanarizeError(ValueError):
    pass


def _frac_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


# Local template, coordinates in the (dA, dB) basis centered on the crossing:
# dA points along u -> v, dB along s -> t.  Channel wires for v run
# horizontally (D on top, F below), channel wires for t vertically (D left,
# F right); the four crossovers sit where they meet.
_Q = Fraction  # noqa: E741 - shorthand for the table below

_TEMPLATE = {
    "vp": (_Q(-1), _Q(0)), "vpp": (_Q(1), _Q(0)),
    "tp": (_Q(0), _Q(-1)), "tpp": (_Q(0), _Q(1)),
    "D1": (_Q(-5, 8), _Q(1, 4)), "F1": (_Q(-5, 8), _Q(-1, 4)),
    "D2": (_Q(5, 8), _Q(1, 4)), "F2": (_Q(5, 8), _Q(-1, 4)),
    "D3": (_Q(-1, 4), _Q(-5, 8)), "F3": (_Q(1, 4), _Q(-5, 8)),
    "D4": (_Q(-1, 4), _Q(5, 8)), "F4": (_Q(1, 4), _Q(5, 8)),
    "Ja1": (_Q(0), _Q(1, 4)), "Ja2": (_Q(0), _Q(-1, 4)),
    "Jb1": (_Q(-1, 4), _Q(0)), "Jb2": (_Q(1, 4), _Q(0)),
    # Crossover internals: x1 on the west side of each center, x2 east,
    # nudged off both axes so nothing is collinear.
    "G11x1": (_Q(-5, 16), _Q(9, 32)), "G11x2": (_Q(-3, 16), _Q(7, 32)),
    "G12x1": (_Q(3, 16), _Q(9, 32)), "G12x2": (_Q(5, 16), _Q(7, 32)),
    "G21x1": (_Q(-5, 16), _Q(-7, 32)), "G21x2": (_Q(-3, 16), _Q(-9, 32)),
    "G22x1": (_Q(3, 16), _Q(-7, 32)), "G22x2": (_Q(5, 16), _Q(-9, 32)),
}

# Fixed id-allocation order: the trace records auxiliaries in this order.
_TEMPLATE_ORDER = ("vp", "vpp", "tp", "tpp",
                   "D1", "F1", "D2", "F2", "D3", "F3", "D4", "F4",
                   "Ja1", "Ja2", "Jb1", "Jb2",
                   "G11x1", "G11x2", "G12x1", "G12x2",
                   "G21x1", "G21x2", "G22x1", "G22x2")


def _segment_param(p: Point, a: Point, b: Point) -> Fraction:
    """Parameter t with p = a + t (b - a) for p on line (a, b)."""
    if b[0] != a[0]:
        return (p[0] - a[0]) / (b[0] - a[0])
    return (p[1] - a[1]) / (b[1] - a[1])


def replace_crossing(instance: EnergyInstance, d: Drawing, trace: ReductionTrace,
                     c: Crossing) -> tuple[EnergyInstance, Drawing, ReductionTrace]:
    """Remove one crossing; returns the rewired instance, drawing, and trace."""
    e1, e2 = tuple(c.edge_a), tuple(c.edge_b)
    u, v = e1
    s, t = e2
    for e in (e1, e2):
        if e not in instance.pairwise:
            raise PlanarizeError(f"crossing references unknown edge {e}")
    pu, pv, ps, pt = (d.coords[n] for n in (u, v, s, t))
    if segment_intersection(pu, pv, ps, pt) != c.point:
        raise PlanarizeError("stale crossing: edges no longer meet at the recorded point")
    p = c.point
    r = free_radius(instance, d, p, exclude={e1, e2})

    d_a = (pv[0] - pu[0], pv[1] - pu[1])
    d_b = (pt[0] - ps[0], pt[1] - ps[1])
    t_p = _segment_param(p, pu, pv)
    t_q = _segment_param(p, ps, pt)
    basis_l1 = abs(d_a[0]) + abs(d_a[1]) + abs(d_b[0]) + abs(d_b[1])
    scale = Fraction(1, 2) * min(t_p, 1 - t_p, t_q, 1 - t_q, r / (2 * basis_l1))
    if scale <= 0:
        raise PlanarizeError("free radius unusable at crossing point")

    def place(g: Point) -> Point:
        return (p[0] + scale * (g[0] * d_a[0] + g[1] * d_b[0]),
                p[1] + scale * (g[0] * d_a[1] + g[1] * d_b[1]))

    fresh = trace.next_fresh_id
    if fresh is None:
        fresh = max(instance.nodes) + 1
    ids = {name: fresh + i for i, name in enumerate(_TEMPLATE_ORDER)}

    frag = merge_fragments(
        split_gadget(ids["vp"], ids["D1"], ids["F1"]),
        split_gadget(ids["vpp"], ids["D2"], ids["F2"]),
        split_gadget(ids["tp"], ids["D3"], ids["F3"]),
        split_gadget(ids["tpp"], ids["D4"], ids["F4"]),
        # Vertical wires are the "heavy" (tl/br) ports, horizontal the light
        # ones, so each crossover passes one v-channel over one t-channel.
        uncross_copy_gadget(tl=ids["Jb1"], tr=ids["D1"], bl=ids["Ja1"],
                            br=ids["D4"], x1=ids["G11x1"], x2=ids["G11x2"]),
        uncross_copy_gadget(tl=ids["Jb2"], tr=ids["Ja1"], bl=ids["D2"],
                            br=ids["F4"], x1=ids["G12x1"], x2=ids["G12x2"]),
        uncross_copy_gadget(tl=ids["D3"], tr=ids["F1"], bl=ids["Ja2"],
                            br=ids["Jb1"], x1=ids["G21x1"], x2=ids["G21x2"]),
        uncross_copy_gadget(tl=ids["F3"], tr=ids["Ja2"], bl=ids["F2"],
                            br=ids["Jb2"], x1=ids["G22x1"], x2=ids["G22x2"]),
    )

    labels = dict(instance.labels)
    unary = dict(instance.unary)
    pairwise = {e: tbl for e, tbl in instance.pairwise.items() if e not in (e1, e2)}
    labels.update(frag.labels)
    unary.update(frag.unary)
    pairwise.update(frag.pairwise)
    # The original interactions move to the copies; equality ties them back.
    pairwise[(u, ids["vp"])] = instance.pairwise[e1]
    pairwise[(v, ids["vpp"])] = equality3()
    pairwise[(s, ids["tp"])] = instance.pairwise[e2]
    pairwise[(t, ids["tpp"])] = equality3()

    nodes = instance.nodes + tuple(ids[name] for name in _TEMPLATE_ORDER)
    edges = tuple(sorted(pairwise))
    out = EnergyInstance(nodes=nodes, labels=labels, unary=unary,
                         edges=edges, pairwise=pairwise, constant=instance.constant)

    coords = dict(d.coords)
    for name in _TEMPLATE_ORDER:
        coords[ids[name]] = place(_TEMPLATE[name])
    out_d = Drawing(coords)

    # Surviving crossings of the two split edges move onto the stub edges but
    # keep their exact intersection points, so points are the stable identity.
    before = sorted(x.point for x in list_crossings(instance, d))
    after = sorted(x.point for x in list_crossings(out, out_d))
    before.remove(p)
    assert after == before, "replacement template changed the crossing set"

    record = CrossingRecord(edge_a=e1, edge_b=e2,
                            point=(_frac_str(p[0]), _frac_str(p[1])),
                            aux_nodes=tuple(ids[name] for name in _TEMPLATE_ORDER))
    out_trace = ReductionTrace(kind=trace.kind,
                               original_nodes=trace.original_nodes,
                               aux_nodes=trace.aux_nodes + record.aux_nodes,
                               big_m=trace.big_m,
                               next_fresh_id=fresh + AUX_PER_CROSSING,
                               crossings=trace.crossings + (record,))
    return out, out_d, out_trace


def planarize(instance: EnergyInstance, d: Drawing) -> tuple[EnergyInstance, Drawing, ReductionTrace]:
    """Replace crossings (first in lexicographic edge order) until none remain."""
    if any(instance.labels[n] != 3 for n in instance.nodes):
        raise InstanceError("planarize requires every node to have 3 labels")
    violations = validate_general_position(instance, d)
    if violations:
        raise GeometryError(f"drawing not in general position: {violations}")
    trace = ReductionTrace(kind="planarize", original_nodes=instance.nodes,
                           aux_nodes=(),
                           next_fresh_id=(max(instance.nodes) + 1 if instance.nodes else 0))
    initial = len(list_crossings(instance, d))
    for _ in range(initial + 1):
        crossings = list_crossings(instance, d)
        if not crossings:
            return instance, d, trace
        instance, d, trace = replace_crossing(instance, d, trace, crossings[0])
    raise PlanarizeError("iteration bound exceeded: crossings did not decrease")


def planar_sigma(original: EnergyInstance, trace: ReductionTrace, y: Labeling) -> Labeling:
    """Restriction of y to the original nodes when that is finite, else all-zeros.

    The gadgets carry only 0/+INF costs, so any y whose restriction has
    finite original energy costs at least as much in the planarized
    instance (equal when the gadget relations hold, +INF otherwise).
    """
    if trace.kind != "planarize":
        raise InstanceError("trace kind mismatch")
    restriction = {n: y[n] for n in original.nodes}
    if is_finite(evaluate(original, restriction)):
        return restriction
    return {n: 0 for n in original.nodes}
