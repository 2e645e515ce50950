"""Exact and approximate solvers for pairwise energy minimization.

Brute force and variable elimination serve as oracles; tree DP, the
submodular min-cut route, and alpha-expansion cover the tractable and
approximable families.  All solvers are deterministic: ties break toward
the lexicographically smallest labeling (in instance node order) for the
enumerating solvers, and toward the canonical reachable-set cut for the
flow-based one.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field
from itertools import product

from .costs import INF, Cost, check_range, ext_add, is_finite
from .instance import EnergyInstance, InstanceError, Labeling, evaluate

DEFAULT_BRUTE_LIMIT = 2**24
DEFAULT_ELIM_LIMIT = 2**24
BRUTE_LIMIT_ENV = "MINE_BRUTE_LIMIT"


class SolverError(ValueError):
    pass


@dataclass(frozen=True)
class SolveResult:
    labeling: Labeling
    value: Cost
    method: str
    exact: bool
    move_values: tuple = ()  # alpha-expansion: energy after each accepted move


def brute_force_limit() -> int:
    raw = os.environ.get(BRUTE_LIMIT_ENV)
    return int(raw) if raw else DEFAULT_BRUTE_LIMIT


def solve_brute_force(instance: EnergyInstance, limit: int | None = None) -> SolveResult:
    """Global minimum by full enumeration, lexicographically smallest argmin."""
    if limit is None:
        limit = brute_force_limit()
    total = 1
    for u in instance.nodes:
        total *= instance.labels[u]
        if total > limit:
            raise SolverError(f"configuration count exceeds brute-force bound {limit}")
    best_x = None
    best: Cost = None
    for combo in product(*(range(instance.labels[u]) for u in instance.nodes)):
        x = dict(zip(instance.nodes, combo))
        v = evaluate(instance, x)
        if best is None or v < best:
            best, best_x = v, x
    if best_x is None:  # zero nodes
        return SolveResult({}, instance.constant, "brute", True)
    return SolveResult(best_x, best, "brute", True)


# ---------------------------------------------------------------------------
# Variable elimination


def min_degree_order(instance: EnergyInstance) -> list[int]:
    """Min-degree elimination order over the instance graph (ties: smallest id)."""
    adj = {u: set() for u in instance.nodes}
    for (u, v) in instance.edges:
        adj[u].add(v)
        adj[v].add(u)
    remaining = set(instance.nodes)
    order = []
    while remaining:
        u = min(remaining, key=lambda w: (len(adj[w] & remaining), w))
        order.append(u)
        nbrs = adj[u] & remaining
        for a in nbrs:
            adj[a] |= nbrs - {a}
        remaining.discard(u)
    return order


def solve_elimination(instance: EnergyInstance, order=None,
                      width_limit: int | None = None) -> SolveResult:
    """Exact minimum via bucket elimination along the given (or min-degree) order."""
    if order is None:
        order = min_degree_order(instance)
    if sorted(order) != sorted(instance.nodes):
        raise SolverError("elimination order must be a permutation of the nodes")
    if width_limit is None:
        width_limit = DEFAULT_ELIM_LIMIT

    # Factors: (scope tuple, table dict scope-assignment -> Cost).
    factors = []
    for u in instance.nodes:
        factors.append(((u,), {(a,): instance.unary[u][a]
                               for a in range(instance.labels[u])}))
    for (u, v) in instance.edges:
        table = instance.pairwise[(u, v)]
        factors.append(((u, v), {(a, b): table[a][b]
                                 for a in range(instance.labels[u])
                                 for b in range(instance.labels[v])}))

    eliminated = []  # (node, separator scope, argmin table)
    for u in order:
        bucket = [f for f in factors if u in f[0]]
        factors = [f for f in factors if u not in f[0]]
        sep = sorted({w for scope, _ in bucket for w in scope if w != u})
        size = 1
        for w in sep:
            size *= instance.labels[w]
        if size > width_limit:
            raise SolverError(f"separator size {size} exceeds elimination bound")
        message: dict[tuple, Cost] = {}
        argmin: dict[tuple, int] = {}
        for sep_assign in product(*(range(instance.labels[w]) for w in sep)):
            ctx = dict(zip(sep, sep_assign))
            best: Cost = None
            best_label = None
            for a in range(instance.labels[u]):
                ctx[u] = a
                v: Cost = 0
                for scope, table in bucket:
                    v = ext_add(v, table[tuple(ctx[w] for w in scope)])
                if best is None or v < best:
                    best, best_label = v, a
            message[sep_assign] = best
            argmin[sep_assign] = best_label
        factors.append((tuple(sep), message))
        eliminated.append((u, tuple(sep), argmin))

    value: Cost = instance.constant
    for scope, table in factors:
        assert scope == ()
        value = ext_add(value, table[()])

    x: Labeling = {}
    for u, sep, argmin in reversed(eliminated):
        x[u] = argmin[tuple(x[w] for w in sep)]
    return SolveResult(x, value, "elimination", True)


# ---------------------------------------------------------------------------
# Tree DP


def solve_tree_dp(instance: EnergyInstance) -> SolveResult:
    """Exact minimum on forests by leaf-to-root message passing."""
    adj = {u: [] for u in instance.nodes}
    for (u, v) in instance.edges:
        adj[u].append(v)
        adj[v].append(u)
    if len(instance.edges) > len(instance.nodes) - _component_count(instance, adj):
        raise SolverError("instance graph contains a cycle")

    value: Cost = instance.constant
    x: Labeling = {}
    visited = set()
    for root in instance.nodes:
        if root in visited:
            continue
        order = []  # DFS preorder of the component
        stack = [(root, None)]
        parent = {root: None}
        while stack:
            u, par = stack.pop()
            visited.add(u)
            order.append(u)
            for w in adj[u]:
                if w != par:
                    if w in parent:
                        raise SolverError("instance graph contains a cycle")
                    parent[w] = u
                    stack.append((w, u))
        # Upward pass: cost-to-leaves for each (node, label).
        msg: dict[int, list[Cost]] = {}
        pick: dict[int, list[int]] = {}
        for u in reversed(order):
            table = list(instance.unary[u])
            for w in adj[u]:
                if parent.get(w) != u:
                    continue
                for a in range(instance.labels[u]):
                    best: Cost = None
                    best_b = None
                    for b in range(instance.labels[w]):
                        v = ext_add(msg[w][b], instance.edge_cost(u, w, a, b))
                        if best is None or v < best:
                            best, best_b = v, b
                    table[a] = ext_add(table[a], best)
                    pick.setdefault(w, [0] * instance.labels[u])[a] = best_b
            msg[u] = table
        root_best: Cost = None
        for a in range(instance.labels[root]):
            if root_best is None or msg[root][a] < root_best:
                root_best, x[root] = msg[root][a], a
        value = ext_add(value, root_best)
        for u in order:
            for w in adj[u]:
                if parent.get(w) == u:
                    x[w] = pick[w][x[u]]
    return SolveResult(x, value, "tree-dp", True)


def _component_count(instance, adj) -> int:
    seen = set()
    count = 0
    for u in instance.nodes:
        if u in seen:
            continue
        count += 1
        stack = [u]
        while stack:
            w = stack.pop()
            if w in seen:
                continue
            seen.add(w)
            stack.extend(adj[w])
    return count


# ---------------------------------------------------------------------------
# Max flow / min cut


@dataclass
class FlowNetwork:
    """Directed network with integer capacities and designated source/sink."""

    source: int
    sink: int
    capacity: dict[tuple[int, int], int] = field(default_factory=dict)

    def add_arc(self, u: int, v: int, cap: int) -> None:
        if cap < 0:
            raise SolverError("negative capacity")
        if cap:
            self.capacity[(u, v)] = self.capacity.get((u, v), 0) + cap

    def nodes(self) -> set[int]:
        out = {self.source, self.sink}
        for (u, v) in self.capacity:
            out.update((u, v))
        return out


def max_flow(network: FlowNetwork) -> tuple[int, tuple[frozenset, frozenset]]:
    """Edmonds-Karp max flow; returns flow value and the (source side, sink side) min cut."""
    residual: dict[int, dict[int, int]] = {}
    for (u, v), cap in network.capacity.items():
        check_range(cap)
        residual.setdefault(u, {})[v] = residual.setdefault(u, {}).get(v, 0) + cap
        residual.setdefault(v, {}).setdefault(u, 0)
    s, t = network.source, network.sink
    residual.setdefault(s, {})
    residual.setdefault(t, {})
    flow = 0
    while True:
        prev = {s: None}
        queue = deque([s])
        while queue and t not in prev:
            u = queue.popleft()
            for v in sorted(residual[u]):
                if v not in prev and residual[u][v] > 0:
                    prev[v] = u
                    queue.append(v)
        if t not in prev:
            break
        bottleneck = None
        v = t
        while prev[v] is not None:
            u = prev[v]
            r = residual[u][v]
            bottleneck = r if bottleneck is None else min(bottleneck, r)
            v = u
        v = t
        while prev[v] is not None:
            u = prev[v]
            residual[u][v] -= bottleneck
            residual[v][u] += bottleneck
            v = u
        flow = check_range(flow + bottleneck)
    reachable = {s}
    stack = [s]
    while stack:
        u = stack.pop()
        for v, r in residual[u].items():
            if r > 0 and v not in reachable:
                reachable.add(v)
                stack.append(v)
    nodes = network.nodes()
    return flow, (frozenset(reachable), frozenset(nodes - reachable))


# ---------------------------------------------------------------------------
# Interaction-type checks


def _require_finite_tables(instance: EnergyInstance) -> None:
    for u in instance.nodes:
        if not all(is_finite(c) for c in instance.unary[u]):
            raise SolverError("infinite unary entry")
    for e in instance.edges:
        if not all(is_finite(c) for row in instance.pairwise[e] for c in row):
            raise SolverError("infinite pairwise entry")


def is_binary(instance: EnergyInstance) -> bool:
    return all(instance.labels[u] == 2 for u in instance.nodes)


def is_submodular_binary(instance: EnergyInstance) -> bool:
    """f(0,1) + f(1,0) >= f(0,0) + f(1,1) on every edge of a binary instance."""
    if not is_binary(instance):
        raise SolverError("submodularity check requires a binary instance")
    _require_finite_tables(instance)
    for e in instance.edges:
        t = instance.pairwise[e]
        if t[0][1] + t[1][0] < t[0][0] + t[1][1]:
            return False
    return True


def is_submodular_lattice(instance: EnergyInstance) -> bool:
    """f(i,j+1) + f(i+1,j) >= f(i,j) + f(i+1,j+1) for all adjacent index pairs."""
    _require_finite_tables(instance)
    for (u, v) in instance.edges:
        t = instance.pairwise[(u, v)]
        for i in range(instance.labels[u] - 1):
            for j in range(instance.labels[v] - 1):
                if t[i][j + 1] + t[i + 1][j] < t[i][j] + t[i + 1][j + 1]:
                    return False
    return True


def _uniform_label_count(instance: EnergyInstance) -> int:
    counts = {instance.labels[u] for u in instance.nodes}
    if len(counts) != 1:
        raise SolverError("uniform label count required")
    return counts.pop()


def is_potts(instance: EnergyInstance) -> bool:
    """Zero diagonal, single constant c_uv >= 0 off-diagonal, per edge."""
    _require_finite_tables(instance)
    k = _uniform_label_count(instance)
    for e in instance.edges:
        t = instance.pairwise[e]
        off = {t[a][b] for a in range(k) for b in range(k) if a != b}
        diag = {t[a][a] for a in range(k)}
        if diag != {0}:
            return False
        if k > 1 and (len(off) != 1 or min(off) < 0):
            return False
    return True


def is_metric(instance: EnergyInstance) -> bool:
    """Zero diagonal, symmetric, non-negative, triangle inequality per edge."""
    _require_finite_tables(instance)
    k = _uniform_label_count(instance)
    for e in instance.edges:
        t = instance.pairwise[e]
        for a in range(k):
            if t[a][a] != 0:
                return False
            for b in range(k):
                if t[a][b] != t[b][a] or t[a][b] < 0:
                    return False
        for a in range(k):
            for b in range(k):
                for c in range(k):
                    if t[a][c] > t[a][b] + t[b][c]:
                        return False
    return True


# ---------------------------------------------------------------------------
# Submodular QPBO via min cut


def solve_submodular_qpbo(instance: EnergyInstance) -> SolveResult:
    """Exact minimum of a binary submodular instance via the posiform min-cut construction."""
    if not is_submodular_binary(instance):
        raise SolverError("instance is not binary submodular")
    # Internal flow ids: 0..n-1 for nodes, n = source, n + 1 = sink.
    idx = {u: i for i, u in enumerate(instance.nodes)}
    _SOURCE = len(instance.nodes)
    _SINK = len(instance.nodes) + 1
    constant = instance.constant
    unary1 = {u: instance.unary[u][1] - instance.unary[u][0] for u in instance.nodes}
    for u in instance.nodes:
        constant = check_range(constant + instance.unary[u][0])
    network = FlowNetwork(source=_SOURCE, sink=_SINK)
    pair_terms = []  # (u, v, beta) for beta * [x_u = 0][x_v = 1]
    for (u, v) in instance.edges:
        t = instance.pairwise[(u, v)]
        a, b, c, d = t[0][0], t[0][1], t[1][0], t[1][1]
        # f_uv = a + (c - a)[x_u=1] + (d - c)[x_v=1] + (b + c - a - d)[x_u=0][x_v=1]
        constant = check_range(constant + a)
        unary1[u] = check_range(unary1[u] + c - a)
        unary1[v] = check_range(unary1[v] + d - c)
        beta = b + c - a - d
        pair_terms.append((u, v, beta))
    for u in instance.nodes:
        w = unary1[u]
        if w >= 0:
            network.add_arc(_SOURCE, idx[u], w)  # cut when x_u = 1
        else:
            constant = check_range(constant + w)
            network.add_arc(idx[u], _SINK, -w)  # cut when x_u = 0
    for (u, v, beta) in pair_terms:
        network.add_arc(idx[u], idx[v], beta)  # cut when x_u = 0, x_v = 1
    flow, (source_side, _) = max_flow(network)
    # Arc s->u is cut exactly when u lands on the sink side, so sink side = label 1.
    x = {u: (0 if idx[u] in source_side else 1) for u in instance.nodes}
    value = check_range(constant + flow)
    result = SolveResult(x, value, "mincut", True)
    assert evaluate(instance, x) == value
    return result


# ---------------------------------------------------------------------------
# Alpha expansion


def _expansion_move_instance(instance: EnergyInstance, x: Labeling, alpha: int) -> EnergyInstance:
    """Binary instance for the move: label 0 keeps x, label 1 switches to alpha."""
    labels = {u: 2 for u in instance.nodes}
    unary = {u: (instance.unary[u][x[u]], instance.unary[u][alpha]) for u in instance.nodes}
    pairwise = {}
    for (u, v) in instance.edges:
        t = instance.pairwise[(u, v)]
        pairwise[(u, v)] = ((t[x[u]][x[v]], t[x[u]][alpha]),
                            (t[alpha][x[v]], t[alpha][alpha]))
    return EnergyInstance(nodes=instance.nodes, labels=labels, unary=unary,
                          edges=instance.edges, pairwise=pairwise,
                          constant=instance.constant)


def alpha_expansion(instance: EnergyInstance, init: Labeling | None = None) -> SolveResult:
    """Move-making approximation for metric instances; 2-approximate on Potts.

    Sweeps labels in ascending order, accepting only strictly improving
    expansion moves, until a full sweep makes no progress.  Every move
    subproblem is binary submodular and solved exactly by min cut.
    """
    if not is_metric(instance):
        raise SolverError("alpha expansion requires a metric instance")
    k = _uniform_label_count(instance)
    x = dict(init) if init is not None else {u: 0 for u in instance.nodes}
    current = evaluate(instance, x)
    moves = [current]
    improved = True
    while improved:
        improved = False
        for alpha in range(k):
            move = _expansion_move_instance(instance, x, alpha)
            assert is_submodular_binary(move)
            res = solve_submodular_qpbo(move)
            if res.value < current:
                x = {u: (alpha if res.labeling[u] == 1 else x[u]) for u in instance.nodes}
                current = res.value
                moves.append(current)
                improved = True
    assert evaluate(instance, x) == current
    return SolveResult(x, current, "alpha-expansion", False, tuple(moves))
