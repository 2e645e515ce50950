"""Embedding a binary instance into a larger label set via big-M padding.

New labels cost M in every unary table, and any pairwise configuration
touching a new label costs M, so optima never use them: the two problems
share their optimal value exactly.
"""

from __future__ import annotations

from ..instance import EnergyInstance, InstanceError, Labeling, big_m, evaluate
from .trace import ReductionTrace


def qpbo_to_klabel(instance: EnergyInstance, k: int) -> tuple[EnergyInstance, ReductionTrace]:
    """Enlarge a binary, all-finite instance's label set to k >= 2."""
    if any(instance.labels[u] != 2 for u in instance.nodes):
        raise InstanceError("qpbo_to_klabel requires a binary instance")
    if k < 2:
        raise InstanceError("target label count must be at least 2")
    m = big_m(instance)
    pad = k - 2
    unary = {u: instance.unary[u] + (m,) * pad for u in instance.nodes}
    pairwise = {}
    for e in instance.edges:
        t = instance.pairwise[e]
        rows = [tuple(t[a]) + (m,) * pad for a in range(2)]
        rows += [(m,) * k] * pad
        pairwise[e] = tuple(rows)
    target = EnergyInstance(nodes=instance.nodes,
                            labels={u: k for u in instance.nodes},
                            unary=unary, edges=instance.edges, pairwise=pairwise,
                            constant=instance.constant)
    trace = ReductionTrace(kind="qpbo-to-klabel", original_nodes=instance.nodes,
                           aux_nodes=(), big_m=m)
    return target, trace


def klabel_sigma(original: EnergyInstance, trace: ReductionTrace, y: Labeling,
                 target: EnergyInstance | None = None) -> Labeling:
    """Reverse map: y itself below the M threshold, else the fixed all-zeros labeling."""
    if trace.kind != "qpbo-to-klabel":
        raise InstanceError("trace kind mismatch")
    if target is None:
        k = max((max(y.values()) + 1 if y else 2), 2)
        target, _ = qpbo_to_klabel(original, k)
    if evaluate(target, y) < trace.big_m and all(y[u] < 2 for u in original.nodes):
        return dict(y)
    return {u: 0 for u in original.nodes}
