"""Zero-or-infinity gadgets used by the planarization reduction.

All gadget entries are 0 or +INF: drawn relations cost nothing, omitted
combinations are forbidden.  Simulated 2-label nodes are 3-label nodes
whose third unary entry is +INF, so the planarization pipeline only ever
handles one node arity.

SPLIT fans a 3-label value out into two Boolean channels:
    label 0 <-> (d, f),  label 1 <-> (d, g) or (e, g),  label 2 <-> (e, f)
where the first channel reads d=0/e=1 and the second f=0/g=1.

UNCROSSCOPY is a planar crossover for two Boolean channels: the value
entering at the top-left exits at the bottom-right and the one entering at
the top-right exits at the bottom-left.  Internally two 3-label nodes
jointly encode the channel pair: with channel values (a, b),
    x1 = a if b = 0 else 2,      x2 = a if b = 1 else 2,
so each internal alone reveals b, while a is readable from whichever
internal is not parked at 2.  The wiring is planar with the four boundary
nodes on the outer face, which is what lets two crossing channels trade
places.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..costs import INF, Cost
from ..instance import EnergyInstance, make_instance

ZERO = 0

# Channel label conventions (simulated 2-label nodes).
SIM2_UNARY = (0, 0, INF)
TRI_UNARY = (0, 0, 0)


def relation_table(shape: tuple[int, int], allowed) -> tuple[tuple[Cost, ...], ...]:
    """k_u x k_v table: 0 on allowed pairs, +INF elsewhere."""
    allowed = set(allowed)
    return tuple(tuple(ZERO if (a, b) in allowed else INF for b in range(shape[1]))
                 for a in range(shape[0]))


def equality3() -> tuple[tuple[Cost, ...], ...]:
    return relation_table((3, 3), [(a, a) for a in range(3)])


def equality2() -> tuple[tuple[Cost, ...], ...]:
    # Equality of simulated 2-label nodes inside 3x3 tables.
    return relation_table((3, 3), [(0, 0), (1, 1)])


# SPLIT relations: boundary B in {0,1,2}; channel D reads 0 for labels {0,1}
# side, channel F distinguishes label 1 from {0,2}.
SPLIT_B_D = relation_table((3, 3), [(0, 0), (1, 0), (1, 1), (2, 1)])
SPLIT_B_F = relation_table((3, 3), [(0, 0), (1, 1), (2, 0)])

# Crossover relations (see module docstring for the internal encoding).
HEAVY_PORT = relation_table((3, 3), [(0, 0), (1, 1), (0, 2), (1, 2)])
LIGHT_PORT_X1 = relation_table((3, 3), [(0, 0), (0, 1), (1, 2)])
LIGHT_PORT_X2 = relation_table((3, 3), [(0, 2), (1, 0), (1, 1)])
CROSS_INTERNAL = relation_table((3, 3), [(0, 2), (1, 2), (2, 0), (2, 1)])


@dataclass
class GadgetFragment:
    """Instance fragment: nodes, {0, INF} tables, designated boundary nodes."""

    boundary: tuple[int, ...]
    internal: tuple[int, ...]
    labels: dict[int, int] = field(default_factory=dict)
    unary: dict[int, tuple[Cost, ...]] = field(default_factory=dict)
    pairwise: dict[tuple[int, int], tuple[tuple[Cost, ...], ...]] = field(default_factory=dict)
    coords: dict[int, tuple[Fraction, Fraction]] = field(default_factory=dict)

    def to_instance(self) -> EnergyInstance:
        return make_instance(self.labels, self.unary, self.pairwise)


def split_gadget(boundary_id: int, d_id: int, f_id: int) -> GadgetFragment:
    """SPLIT: 3-label boundary node plus its two Boolean channel halves."""
    frag = GadgetFragment(boundary=(boundary_id,), internal=(d_id, f_id))
    frag.labels = {boundary_id: 3, d_id: 3, f_id: 3}
    frag.unary = {boundary_id: TRI_UNARY, d_id: SIM2_UNARY, f_id: SIM2_UNARY}
    frag.pairwise = {
        tuple(sorted((boundary_id, d_id))): _orient(SPLIT_B_D, boundary_id, d_id),
        tuple(sorted((boundary_id, f_id))): _orient(SPLIT_B_F, boundary_id, f_id),
    }
    return frag


def uncross_copy_gadget(tl: int, tr: int, bl: int, br: int,
                        x1: int, x2: int) -> GadgetFragment:
    """UNCROSSCOPY: planar crossover; br copies tl, bl copies tr.

    tl and br are the "heavy" ports (wired to both internals), tr and bl
    the "light" ones (one internal each).
    """
    frag = GadgetFragment(boundary=(tl, tr, bl, br), internal=(x1, x2))
    frag.labels = {n: 3 for n in (tl, tr, bl, br, x1, x2)}
    frag.unary = {tl: SIM2_UNARY, tr: SIM2_UNARY, bl: SIM2_UNARY, br: SIM2_UNARY,
                  x1: TRI_UNARY, x2: TRI_UNARY}
    frag.pairwise = {
        tuple(sorted((tl, x1))): _orient(HEAVY_PORT, tl, x1),
        tuple(sorted((tl, x2))): _orient(HEAVY_PORT, tl, x2),
        tuple(sorted((br, x1))): _orient(HEAVY_PORT, br, x1),
        tuple(sorted((br, x2))): _orient(HEAVY_PORT, br, x2),
        tuple(sorted((tr, x1))): _orient(LIGHT_PORT_X1, tr, x1),
        tuple(sorted((bl, x2))): _orient(LIGHT_PORT_X2, bl, x2),
        tuple(sorted((x1, x2))): _orient(CROSS_INTERNAL, x1, x2),
    }
    return frag


def _orient(table, u: int, v: int):
    """Store table keyed by sorted node pair; transpose when u > v."""
    if u < v:
        return table
    return tuple(zip(*table))


def merge_fragments(*frags: GadgetFragment) -> GadgetFragment:
    """Union of fragments; shared nodes must agree on labels and unary tables."""
    out = GadgetFragment(boundary=(), internal=())
    for f in frags:
        for n, k in f.labels.items():
            if out.labels.setdefault(n, k) != k:
                raise ValueError(f"node {n}: conflicting label counts")
            existing = out.unary.get(n)
            if existing is not None and existing != f.unary[n]:
                raise ValueError(f"node {n}: conflicting unary tables")
            out.unary[n] = f.unary[n]
        for e, t in f.pairwise.items():
            if e in out.pairwise and out.pairwise[e] != t:
                raise ValueError(f"edge {e}: conflicting tables")
            out.pairwise[e] = t
        out.coords.update(f.coords)
    return out
