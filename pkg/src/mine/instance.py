"""Pairwise energy minimization instances over extended-integer costs.

An instance is a labeled graph: each node u carries a unary cost table of
length k_u, each undirected edge (u, v) a k_u x k_v pairwise table, plus a
finite constant offset.  Instances are immutable after construction; every
operation here is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .costs import INF, Cost, CostOverflowError, check_range, ext_add, is_finite

Labeling = dict[int, int]


class InstanceError(ValueError):
    """Malformed instance or labeling/instance mismatch."""


def normalize_edge(u: int, v: int) -> tuple[int, int]:
    if u == v:
        raise InstanceError(f"self-loop on node {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class EnergyInstance:
    nodes: tuple[int, ...]
    labels: dict[int, int]
    unary: dict[int, tuple[Cost, ...]]
    edges: tuple[tuple[int, int], ...]
    pairwise: dict[tuple[int, int], tuple[tuple[Cost, ...], ...]]
    constant: int = 0

    def __post_init__(self):
        seen = set(self.nodes)
        if len(seen) != len(self.nodes):
            raise InstanceError("duplicate node ids")
        if set(self.labels) != seen or set(self.unary) != seen:
            raise InstanceError("labels/unary tables must cover exactly the node set")
        for u in self.nodes:
            k = self.labels[u]
            if k < 1:
                raise InstanceError(f"node {u}: label count must be positive")
            if len(self.unary[u]) != k:
                raise InstanceError(f"node {u}: unary table has wrong length")
            if not any(is_finite(c) for c in self.unary[u]):
                raise InstanceError(f"node {u}: no label with finite unary cost")
        if len(set(self.edges)) != len(self.edges):
            raise InstanceError("duplicate edges")
        if set(self.pairwise) != set(self.edges):
            raise InstanceError("pairwise tables must cover exactly the edge set")
        for (u, v) in self.edges:
            if (u, v) != normalize_edge(u, v):
                raise InstanceError(f"edge {(u, v)} not normalized (u < v required)")
            if u not in seen or v not in seen:
                raise InstanceError(f"edge {(u, v)} references unknown node")
            table = self.pairwise[(u, v)]
            if len(table) != self.labels[u] or any(len(row) != self.labels[v] for row in table):
                raise InstanceError(f"edge {(u, v)}: pairwise table has wrong dimensions")
        if not isinstance(self.constant, int):
            raise InstanceError("constant offset must be a finite integer")
        check_range(self.constant)

    def edge_cost(self, u: int, v: int, a: int, b: int) -> Cost:
        """Cost of edge {u, v} with u labeled a, v labeled b (any orientation)."""
        if u < v:
            return self.pairwise[(u, v)][a][b]
        return self.pairwise[(v, u)][b][a]

    def neighbors(self, u: int) -> list[int]:
        out = []
        for (a, b) in self.edges:
            if a == u:
                out.append(b)
            elif b == u:
                out.append(a)
        return out


def make_instance(labels: dict[int, int],
                  unary: dict[int, tuple[Cost, ...]] | None = None,
                  pairwise: dict[tuple[int, int], tuple[tuple[Cost, ...], ...]] | None = None,
                  constant: int = 0) -> EnergyInstance:
    """Convenience constructor: nodes sorted, edges normalized and sorted."""
    nodes = tuple(sorted(labels))
    unary = dict(unary or {})
    for u in nodes:
        unary.setdefault(u, tuple([0] * labels[u]))
    pw = {}
    for (u, v), table in (pairwise or {}).items():
        key = normalize_edge(u, v)
        if key != (u, v):
            table = tuple(zip(*table))
        if key in pw:
            raise InstanceError(f"edge {key} given twice")
        pw[key] = tuple(tuple(row) for row in table)
    edges = tuple(sorted(pw))
    return EnergyInstance(nodes=nodes, labels=dict(labels), unary=unary,
                          edges=edges, pairwise=pw, constant=constant)


def check_labeling(instance: EnergyInstance, x: Labeling) -> None:
    if set(x) != set(instance.nodes):
        raise InstanceError("labeling does not cover exactly the instance's node set")
    for u, a in x.items():
        if not (0 <= a < instance.labels[u]):
            raise InstanceError(f"node {u}: label {a} out of range")


def evaluate(instance: EnergyInstance, x: Labeling) -> Cost:
    """Energy of labeling x: constant + sum of unary + sum of pairwise costs."""
    check_labeling(instance, x)
    total: Cost = instance.constant
    for u in instance.nodes:
        total = ext_add(total, instance.unary[u][x[u]])
    for (u, v) in instance.edges:
        total = ext_add(total, instance.pairwise[(u, v)][x[u]][x[v]])
    return total


def big_m(instance: EnergyInstance) -> int:
    """Bound strictly exceeding |energy| of every labeling of an all-finite instance."""
    total = 1 + abs(instance.constant)
    for u in instance.nodes:
        for c in instance.unary[u]:
            if not is_finite(c):
                raise InstanceError("big_m requires an all-finite instance")
            total = check_range(total + abs(c))
    for e in instance.edges:
        for row in instance.pairwise[e]:
            for c in row:
                if not is_finite(c):
                    raise InstanceError("big_m requires an all-finite instance")
                total = check_range(total + abs(c))
    return total


def finite_big_m(instance: EnergyInstance) -> int:
    """big_m computed over the finite entries only (INF entries skipped)."""
    total = 1 + abs(instance.constant)
    for u in instance.nodes:
        for c in instance.unary[u]:
            if is_finite(c):
                total = check_range(total + abs(c))
    for e in instance.edges:
        for row in instance.pairwise[e]:
            for c in row:
                if is_finite(c):
                    total = check_range(total + abs(c))
    return total


def materialize_infinities(instance: EnergyInstance) -> EnergyInstance:
    """Replace every +INF entry by the big-M constant of the finite part.

    Labelings with finite original energy keep their energy exactly, and the
    finite-optimal argmin set is preserved.
    """
    m = finite_big_m(instance)

    def fix(c: Cost) -> int:
        return c if is_finite(c) else m

    unary = {u: tuple(fix(c) for c in instance.unary[u]) for u in instance.nodes}
    pairwise = {e: tuple(tuple(fix(c) for c in row) for row in instance.pairwise[e])
                for e in instance.edges}
    return EnergyInstance(nodes=instance.nodes, labels=dict(instance.labels),
                          unary=unary, edges=instance.edges, pairwise=pairwise,
                          constant=instance.constant)
