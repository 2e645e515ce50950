"""Exact rational 2D geometry for straight-line instance drawings.

Every predicate runs on Fractions; no floating point anywhere, so "no
crossings remain" is a decidable postcondition.  Degenerate drawings are
rejected, never perturbed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .instance import EnergyInstance

Point = tuple[Fraction, Fraction]


class GeometryError(ValueError):
    pass


class GeneralPositionError(GeometryError):
    """Collinear overlapping segments or similar degeneracy."""


@dataclass(frozen=True)
class Drawing:
    coords: dict[int, Point]

    def __post_init__(self):
        points = list(self.coords.values())
        if len(set(points)) != len(points):
            raise GeometryError("two nodes share a point")

    def covers(self, instance: EnergyInstance) -> bool:
        return set(instance.nodes) <= set(self.coords)


@dataclass(frozen=True)
class Crossing:
    edge_a: tuple[int, int]
    edge_b: tuple[int, int]
    point: Point


def make_point(x, y) -> Point:
    return (Fraction(x), Fraction(y))


def circle_layout(nodes) -> Drawing:
    """Deterministic fallback layout: rational points on the unit circle, in id order."""
    coords = {}
    for i, u in enumerate(sorted(nodes)):
        # Weierstrass parametrization keeps the points exactly on the circle.
        t = Fraction(i)
        den = 1 + t * t
        coords[u] = ((1 - t * t) / den, 2 * t / den)
    return Drawing(coords)


def _cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _bbox_disjoint(p1, p2, p3, p4) -> bool:
    for axis in (0, 1):
        lo1, hi1 = sorted((p1[axis], p2[axis]))
        lo2, hi2 = sorted((p3[axis], p4[axis]))
        if hi1 < lo2 or hi2 < lo1:
            return True
    return False


def segment_intersection(p1: Point, p2: Point, p3: Point, p4: Point) -> Point | None:
    """Proper interior intersection of open segments (p1,p2) and (p3,p4), or None.

    Touching at an endpoint is not proper; collinear overlap raises
    GeneralPositionError.
    """
    if p1 == p2 or p3 == p4:
        raise GeometryError("degenerate segment")
    d1 = _cross(p3, p4, p1)
    d2 = _cross(p3, p4, p2)
    d3 = _cross(p1, p2, p3)
    d4 = _cross(p1, p2, p4)
    if d1 == 0 and d2 == 0:
        # Collinear: disjoint or touching is fine, overlap violates general position.
        if _bbox_disjoint(p1, p2, p3, p4):
            return None
        lo1, hi1 = sorted((p1, p2))
        lo2, hi2 = sorted((p3, p4))
        if hi1 == lo2 or hi2 == lo1:
            return None  # touch at a single shared point
        raise GeneralPositionError("collinear overlapping segments")
    if ((d1 > 0) != (d2 > 0)) and ((d3 > 0) != (d4 > 0)) and d1 != 0 and d2 != 0 and d3 != 0 and d4 != 0:
        # d1, d2 are the signed areas of p1, p2 against line (p3, p4), so
        # they interpolate to zero exactly at the intersection.
        t = d1 / (d1 - d2)
        return (p1[0] + t * (p2[0] - p1[0]), p1[1] + t * (p2[1] - p1[1]))
    return None


def point_on_open_segment(q: Point, a: Point, b: Point) -> bool:
    if _cross(a, b, q) != 0:
        return False
    return min(a, b) < q < max(a, b)


def list_crossings(instance: EnergyInstance, d: Drawing) -> list[Crossing]:
    """All proper crossings between edges sharing no endpoint, in lexicographic edge order."""
    if not d.covers(instance):
        raise GeometryError("drawing does not cover the instance")
    out = []
    edges = instance.edges
    for i in range(len(edges)):
        for j in range(i + 1, len(edges)):
            ea, eb = edges[i], edges[j]
            if set(ea) & set(eb):
                continue
            p = segment_intersection(d.coords[ea[0]], d.coords[ea[1]],
                                     d.coords[eb[0]], d.coords[eb[1]])
            if p is not None:
                out.append(Crossing(ea, eb, p))
    return out


@dataclass(frozen=True)
class PositionViolation:
    kind: str  # "node-on-edge" | "collinear-overlap" | "concurrent-edges"
    detail: tuple


def validate_general_position(instance: EnergyInstance, d: Drawing) -> list[PositionViolation]:
    """Empty list iff the drawing is in general position.

    Checks: no node interior to a non-incident edge, no collinear edge
    overlaps, no three edges through a common interior point.
    """
    if not d.covers(instance):
        raise GeometryError("drawing does not cover the instance")
    violations = []
    for (u, v) in instance.edges:
        a, b = d.coords[u], d.coords[v]
        for w in instance.nodes:
            if w in (u, v):
                continue
            if point_on_open_segment(d.coords[w], a, b):
                violations.append(PositionViolation("node-on-edge", (w, (u, v))))
    point_to_edges: dict[Point, set] = {}
    edges = instance.edges
    for i in range(len(edges)):
        for j in range(i + 1, len(edges)):
            ea, eb = edges[i], edges[j]
            if set(ea) & set(eb):
                continue
            try:
                p = segment_intersection(d.coords[ea[0]], d.coords[ea[1]],
                                         d.coords[eb[0]], d.coords[eb[1]])
            except GeneralPositionError:
                violations.append(PositionViolation("collinear-overlap", (ea, eb)))
                continue
            if p is not None:
                point_to_edges.setdefault(p, set()).update((ea, eb))
    for p, es in point_to_edges.items():
        if len(es) > 2:
            violations.append(PositionViolation("concurrent-edges", (p, tuple(sorted(es)))))
    return violations


def _dist2_point(p: Point, q: Point) -> Fraction:
    return (p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2


def _dist2_segment(p: Point, a: Point, b: Point) -> Fraction:
    ab2 = _dist2_point(a, b)
    t = ((p[0] - a[0]) * (b[0] - a[0]) + (p[1] - a[1]) * (b[1] - a[1])) / ab2
    t = max(Fraction(0), min(Fraction(1), t))
    foot = (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))
    return _dist2_point(p, foot)


def rational_sqrt_lower(value: Fraction, bits: int = 32) -> Fraction:
    """Deterministic rational lower bound on sqrt(value), positive for value > 0."""
    if value < 0:
        raise GeometryError("negative radicand")
    if value == 0:
        return Fraction(0)
    a, b = value.numerator, value.denominator
    shift = 1 << bits
    # sqrt(a/b) = sqrt(a*b)/b >= isqrt(a*b*shift^2) / (b*shift)
    return Fraction(isqrt(a * b * shift * shift), b * shift)


def free_radius(instance: EnergyInstance, d: Drawing, p: Point,
                exclude: set[tuple[int, int]] = frozenset()) -> Fraction:
    """A positive radius around p clear of nodes, non-excluded edges, and other crossings.

    Returns a deterministic rational lower bound on half the exact minimum
    distance (the exact value is generally irrational).
    """
    exclude = {tuple(sorted(e)) for e in exclude}
    min_d2 = None
    for u in instance.nodes:
        min_d2 = _min_opt(min_d2, _dist2_point(p, d.coords[u]))
    for e in instance.edges:
        if e in exclude:
            continue
        d2 = _dist2_segment(p, d.coords[e[0]], d.coords[e[1]])
        if d2 == 0:
            raise GeometryError(f"point lies on non-excluded edge {e}")
        min_d2 = _min_opt(min_d2, d2)
    for c in list_crossings(instance, d):
        if c.point == p:
            continue
        min_d2 = _min_opt(min_d2, _dist2_point(p, c.point))
    if min_d2 is None:
        raise GeometryError("empty drawing: free radius undefined")
    if min_d2 == 0:
        raise GeometryError("point coincides with a node or crossing")
    return rational_sqrt_lower(min_d2) / 2


def _min_opt(current, candidate):
    return candidate if current is None or candidate < current else current
