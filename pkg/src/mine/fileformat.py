"""Text formats: instances ("MINE 1"), weighted 3-CNF, solutions, traces.

The instance format is line-oriented and canonical: sorted node ids,
sorted edges, one record per line, "INF" for +infinity, coordinates as
exact "num/den" rationals.  Serializing a parsed file reproduces it byte
for byte, which is what lets tests pin golden files.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .costs import INF, Cost, is_finite
from .geometry import Drawing, Point
from .instance import EnergyInstance, Labeling, make_instance
from .reductions.trace import ReductionTrace, trace_from_json
from .reductions.wsat import W3SatTriv


class ParseError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _cost_token(tok: str, line_no: int) -> Cost:
    if tok == "INF":
        return INF
    try:
        return int(tok)
    except ValueError:
        raise ParseError(line_no, f"expected integer or INF, got {tok!r}") from None


def _cost_str(c: Cost) -> str:
    return str(c) if is_finite(c) else "INF"


def _frac_token(tok: str, line_no: int) -> Fraction:
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError(line_no, f"expected rational, got {tok!r}") from None


def _frac_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def _ints(tokens, line_no):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(line_no, f"expected integers, got {tokens}") from None


def parse_instance(text: str) -> tuple[EnergyInstance, Drawing | None]:
    lines = text.splitlines()
    n = None
    ids: list[int] | None = None
    label_counts: list[int] | None = None
    constant = 0
    unary: dict[int, tuple[Cost, ...]] = {}
    coords: dict[int, Point] = {}
    edges: list[tuple[int, int, list[Cost]]] = []
    header_seen = False

    for line_no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if not header_seen:
            if tokens != ["MINE", "1"]:
                raise ParseError(line_no, "expected header 'MINE 1'")
            header_seen = True
            continue
        kw, rest = tokens[0], tokens[1:]
        if kw == "nodes":
            if len(rest) != 1:
                raise ParseError(line_no, "nodes takes one count")
            n = _ints(rest, line_no)[0]
        elif kw == "ids":
            ids = _ints(rest, line_no)
        elif kw == "labels":
            label_counts = _ints(rest, line_no)
        elif kw == "constant":
            if len(rest) != 1:
                raise ParseError(line_no, "constant takes one integer")
            constant = _ints(rest, line_no)[0]
        elif kw == "unary":
            if len(rest) < 2:
                raise ParseError(line_no, "unary needs a node id and entries")
            u = _ints(rest[:1], line_no)[0]
            if u in unary:
                raise ParseError(line_no, f"duplicate unary record for node {u}")
            unary[u] = tuple(_cost_token(t, line_no) for t in rest[1:])
        elif kw == "coord":
            if len(rest) != 3:
                raise ParseError(line_no, "coord needs a node id and two rationals")
            u = _ints(rest[:1], line_no)[0]
            if u in coords:
                raise ParseError(line_no, f"duplicate coord record for node {u}")
            coords[u] = (_frac_token(rest[1], line_no), _frac_token(rest[2], line_no))
        elif kw == "edge":
            if len(rest) < 3:
                raise ParseError(line_no, "edge needs two node ids and entries")
            u, v = _ints(rest[:2], line_no)
            edges.append((u, v, [_cost_token(t, line_no) for t in rest[2:]],))
        else:
            raise ParseError(line_no, f"unknown record {kw!r}")

    last = len(lines)
    if not header_seen:
        raise ParseError(1, "missing header 'MINE 1'")
    if n is None:
        raise ParseError(last, "missing 'nodes' record")
    if ids is None:
        ids = list(range(n))
    if len(ids) != n or len(set(ids)) != n:
        raise ParseError(last, "ids must list exactly the declared node count, no repeats")
    if label_counts is None or len(label_counts) != n:
        raise ParseError(last, "labels must give one count per node")

    labels = dict(zip(ids, label_counts))
    for u, tbl in unary.items():
        if u not in labels:
            raise ParseError(last, f"unary record for unknown node {u}")
        if len(tbl) != labels[u]:
            raise ParseError(last, f"node {u}: unary has {len(tbl)} entries, expected {labels[u]}")
    for u in coords:
        if u not in labels:
            raise ParseError(last, f"coord record for unknown node {u}")

    pairwise = {}
    for (u, v, flat) in edges:
        if u not in labels or v not in labels:
            raise ParseError(last, f"edge ({u}, {v}) references unknown node")
        ku, kv = labels[u], labels[v]
        if len(flat) != ku * kv:
            raise ParseError(last, f"edge ({u}, {v}): expected {ku * kv} entries, got {len(flat)}")
        table = tuple(tuple(flat[a * kv + b] for b in range(kv)) for a in range(ku))
        if (u, v) in pairwise or (v, u) in pairwise:
            raise ParseError(last, f"duplicate edge ({u}, {v})")
        pairwise[(u, v)] = table

    instance = make_instance(labels, unary, pairwise, constant)
    drawing = None
    if coords:
        if set(coords) != set(labels):
            raise ParseError(last, "coords must cover all nodes or none")
        drawing = Drawing(coords)
    return instance, drawing


def serialize_instance(instance: EnergyInstance, d: Drawing | None = None) -> str:
    out = ["MINE 1", f"nodes {len(instance.nodes)}"]
    ids = sorted(instance.nodes)
    out.append("ids " + " ".join(str(u) for u in ids))
    out.append("labels " + " ".join(str(instance.labels[u]) for u in ids))
    out.append(f"constant {instance.constant}")
    if d is not None:
        for u in ids:
            x, y = d.coords[u]
            out.append(f"coord {u} {_frac_str(Fraction(x))} {_frac_str(Fraction(y))}")
    for u in ids:
        out.append(f"unary {u} " + " ".join(_cost_str(c) for c in instance.unary[u]))
    for (u, v) in sorted(instance.edges):
        flat = [c for row in instance.pairwise[(u, v)] for c in row]
        out.append(f"edge {u} {v} " + " ".join(_cost_str(c) for c in flat))
    return "\n".join(out) + "\n"


def parse_wcnf3(text: str) -> W3SatTriv:
    n = m = None
    weights = None
    clauses = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if len(tokens) != 4 or tokens[1] != "wcnf3":
                raise ParseError(line_no, "expected 'p wcnf3 <vars> <clauses>'")
            n, m = _ints(tokens[2:], line_no)
        elif tokens[0] == "w":
            if n is None:
                raise ParseError(line_no, "weight line before problem line")
            weights = _ints(tokens[1:], line_no)
            if len(weights) != n:
                raise ParseError(line_no, f"expected {n} weights, got {len(weights)}")
            if any(w < 0 for w in weights):
                raise ParseError(line_no, "weights must be non-negative")
        else:
            lits = _ints(tokens, line_no)
            if len(lits) != 4 or lits[-1] != 0:
                raise ParseError(line_no, "clause must be 3 literals plus terminating 0")
            clauses.append(tuple(lits[:3]))
    if n is None or weights is None:
        raise ParseError(len(text.splitlines()), "missing problem or weight line")
    if len(clauses) != m:
        raise ParseError(len(text.splitlines()),
                         f"declared {m} clauses, found {len(clauses)}")
    try:
        return W3SatTriv(num_vars=n, clauses=tuple(clauses), weights=tuple(weights))
    except ValueError as exc:
        raise ParseError(len(text.splitlines()), str(exc)) from None


def serialize_wcnf3(sat: W3SatTriv) -> str:
    out = [f"p wcnf3 {sat.num_vars} {len(sat.clauses)}",
           "w " + " ".join(str(w) for w in sat.weights)]
    for clause in sat.clauses:
        out.append(" ".join(str(l) for l in clause) + " 0")
    return "\n".join(out) + "\n"


def parse_solution(text: str) -> tuple[Labeling, Cost | None]:
    labeling: Labeling = {}
    energy = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "energy":
            if len(tokens) != 2:
                raise ParseError(line_no, "energy takes one value")
            energy = _cost_token(tokens[1], line_no)
        else:
            if len(tokens) != 2:
                raise ParseError(line_no, "expected '<node> <label>'")
            u, a = _ints(tokens, line_no)
            if u in labeling:
                raise ParseError(line_no, f"duplicate assignment for node {u}")
            labeling[u] = a
    return labeling, energy


def serialize_solution(labeling: Labeling, energy: Cost | None = None) -> str:
    out = [f"{u} {labeling[u]}" for u in sorted(labeling)]
    if energy is not None:
        out.append(f"energy {_cost_str(energy)}")
    return "\n".join(out) + "\n"


def write_trace(trace: ReductionTrace) -> str:
    return json.dumps(trace.to_json(), indent=2, sort_keys=True) + "\n"


def read_trace(text: str) -> ReductionTrace:
    try:
        return trace_from_json(json.loads(text))
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise ParseError(1, f"bad trace JSON: {exc}") from None
