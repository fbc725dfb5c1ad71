"""Oriented link diagrams as PD codes.

A crossing is a record (sign, under_in, over_in, under_out, over_out) of arc
identifiers; arcs are directed, each produced by exactly one out-port and
consumed by exactly one in-port. Crossing-free circles are counted in
``free_loops``. Signs are carried explicitly and validated rather than
inferred from port order: sign bugs are the dominant failure mode in skein
code.

The cyclic port order used for face tracing is fixed as
(under_in, over_in, under_out, over_out) counterclockwise at positive
crossings and the mirrored order (under_in, over_out, under_out, over_in) at
negative ones. Switching a crossing's sign permutes roles consistently with
this convention, so the rotation system survives skein moves.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from knitweave.braid import BraidWord

__all__ = [
    "Crossing",
    "PlanarDiagram",
    "SeifertGraph",
    "PDParseError",
    "braid_closure",
    "seifert_circles",
    "seifert_graph",
    "writhe",
    "component_count",
    "planarity_check",
    "canonical_key",
    "parse_pd",
    "format_pd",
]


@dataclass(frozen=True)
class Crossing:
    """One crossing, ports named by strand role."""

    sign: int
    under_in: int
    over_in: int
    under_out: int
    over_out: int

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError(f"crossing sign must be +1 or -1, got {self.sign}")

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.sign, self.under_in, self.over_in, self.under_out, self.over_out)


class PlanarDiagram:
    """A closed oriented diagram: crossings plus crossing-free circles."""

    __slots__ = ("crossings", "free_loops", "arcs")

    def __init__(self, crossings: Iterable[Crossing], free_loops: int = 0) -> None:
        self.crossings = tuple(crossings)
        self.free_loops = int(free_loops)
        if self.free_loops < 0:
            raise ValueError("free loop count cannot be negative")
        ins: list[int] = []
        outs: list[int] = []
        for c in self.crossings:
            ins += [c.under_in, c.over_in]
            outs += [c.under_out, c.over_out]
        if len(set(ins)) != len(ins):
            raise ValueError("an arc is consumed by more than one in-port")
        if len(set(outs)) != len(outs):
            raise ValueError("an arc is produced by more than one out-port")
        if set(ins) != set(outs):
            stray = set(ins) ^ set(outs)
            raise ValueError(f"diagram is not closed; unmatched arcs {sorted(stray)}")
        self.arcs = frozenset(ins)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, PlanarDiagram)
            and self.crossings == other.crossings
            and self.free_loops == other.free_loops
        )

    def __repr__(self) -> str:
        return f"PlanarDiagram({len(self.crossings)} crossings, {self.free_loops} free loops)"

    def raw(self) -> tuple[tuple[tuple[int, int, int, int, int], ...], int]:
        return (tuple(c.as_tuple() for c in self.crossings), self.free_loops)


@dataclass(frozen=True)
class SeifertGraph:
    """Vertices are Seifert circles; one signed edge per crossing."""

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int, int], ...]  # (circle_a, circle_b, sign), a < b


def braid_closure(word: BraidWord) -> PlanarDiagram:
    """PD code of the standard closure of a braid word."""
    n = word.strands
    cur = list(range(1, n + 1))
    fresh = n
    crossings: list[Crossing] = []
    for g in word.letters:
        i = abs(g)
        a, b = cur[i - 1], cur[i]  # left and right inputs
        p, q = fresh + 1, fresh + 2  # left and right outputs
        fresh += 2
        if g > 0:
            crossings.append(Crossing(1, under_in=b, over_in=a, under_out=p, over_out=q))
        else:
            crossings.append(Crossing(-1, under_in=a, over_in=b, under_out=q, over_out=p))
        cur[i - 1], cur[i] = p, q
    free_loops = 0
    relabel: dict[int, int] = {}
    for j in range(n):
        end, start = cur[j], j + 1
        if end == start:
            free_loops += 1  # untouched strand closes to a circle
        else:
            relabel[end] = start
    if relabel:
        crossings = [
            Crossing(
                c.sign,
                relabel.get(c.under_in, c.under_in),
                relabel.get(c.over_in, c.over_in),
                relabel.get(c.under_out, c.under_out),
                relabel.get(c.over_out, c.over_out),
            )
            for c in crossings
        ]
    return PlanarDiagram(crossings, free_loops)


class _UnionFind:
    def __init__(self) -> None:
        self.parent: dict[int, int] = {}

    def find(self, x: int) -> int:
        p = self.parent.setdefault(x, x)
        while p != x:
            self.parent[x] = p = self.parent[p]
            x, p = p, self.parent[p]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def seifert_circles(d: PlanarDiagram) -> tuple[int, dict[int, int]]:
    """Orientation-respecting smoothing of every crossing.

    The smoothing joins under_in with over_out and over_in with under_out at
    every crossing (both signs). Returns the circle count, including free
    loops, and the arc -> circle-id assignment, circles numbered 1.. in order
    of their smallest arc.
    """
    uf = _UnionFind()
    for a in d.arcs:
        uf.find(a)
    for c in d.crossings:
        uf.union(c.under_in, c.over_out)
        uf.union(c.over_in, c.under_out)
    groups: dict[int, list[int]] = {}
    for a in d.arcs:
        groups.setdefault(uf.find(a), []).append(a)
    ordering = sorted(groups, key=lambda r: min(groups[r]))
    circle_of_root = {r: i + 1 for i, r in enumerate(ordering)}
    assignment = {a: circle_of_root[uf.find(a)] for a in d.arcs}
    return len(groups) + d.free_loops, assignment


def seifert_graph(d: PlanarDiagram) -> SeifertGraph:
    """One vertex per Seifert circle, one signed edge per crossing."""
    count, assignment = seifert_circles(d)
    edges = []
    for c in d.crossings:
        a = assignment[c.under_in]
        b = assignment[c.over_in]
        if a == b:
            raise ValueError(
                "crossing joins a Seifert circle to itself; "
                "the diagram cannot be a planar oriented diagram"
            )
        edges.append((min(a, b), max(a, b), c.sign))
    vertices = tuple(range(1, count + 1))  # free loops sit at the top ids
    return SeifertGraph(vertices, tuple(edges))


def writhe(d: PlanarDiagram) -> int:
    return sum(c.sign for c in d.crossings)


def component_count(d: PlanarDiagram) -> int:
    """Link components: orbits of arcs under through-strand continuation."""
    uf = _UnionFind()
    for a in d.arcs:
        uf.find(a)
    for c in d.crossings:
        uf.union(c.under_in, c.under_out)
        uf.union(c.over_in, c.over_out)
    roots = {uf.find(a) for a in d.arcs}
    return len(roots) + d.free_loops


# port names in the order (under_in, over_in, under_out, over_out)
_PORTS = ("ui", "oi", "uo", "oo")


def _rotation(sign: int) -> tuple[str, str, str, str]:
    """Counterclockwise port order at a crossing of the given sign."""
    return ("ui", "oi", "uo", "oo") if sign > 0 else ("ui", "oo", "uo", "oi")


def planarity_check(d: PlanarDiagram) -> bool:
    """True iff every connected component embeds in the sphere (genus 0).

    Faces of the 4-valent ribbon graph induced by the fixed cyclic port order
    are traced as dart orbits; a component with V crossings and E arcs is
    planar iff V - E + F = 2. Free loops are trivially planar.
    """
    if not d.crossings:
        return True
    port_arc: dict[tuple[int, str], int] = {}
    producer: dict[int, tuple[int, str]] = {}
    consumer: dict[int, tuple[int, str]] = {}
    for idx, c in enumerate(d.crossings):
        for name, arc in zip(_PORTS, (c.under_in, c.over_in, c.under_out, c.over_out)):
            port_arc[(idx, name)] = arc
            if name in ("ui", "oi"):
                consumer[arc] = (idx, name)
            else:
                producer[arc] = (idx, name)

    # connected components of the crossing graph
    uf = _UnionFind()
    for idx in range(len(d.crossings)):
        uf.find(idx)
    for arc in d.arcs:
        uf.union(producer[arc][0], consumer[arc][0])
    comp_of = {idx: uf.find(idx) for idx in range(len(d.crossings))}

    next_ccw = {}
    for idx, c in enumerate(d.crossings):
        rot = _rotation(c.sign)
        for k, name in enumerate(rot):
            next_ccw[(idx, name)] = (idx, rot[(k + 1) % 4])

    # darts: (arc, True) runs producer -> consumer, (arc, False) the reverse
    faces_of_comp: dict[int, int] = {}
    seen: set[tuple[int, bool]] = set()
    for arc in d.arcs:
        for forward in (True, False):
            dart = (arc, forward)
            if dart in seen:
                continue
            comp = comp_of[producer[arc][0]]
            faces_of_comp[comp] = faces_of_comp.get(comp, 0) + 1
            a, fwd = dart
            while (a, fwd) not in seen:
                seen.add((a, fwd))
                port = consumer[a] if fwd else producer[a]
                nxt_port = next_ccw[port]
                nxt_arc = port_arc[nxt_port]
                fwd = nxt_port[1] in ("uo", "oo")
                a = nxt_arc

    counts: dict[int, tuple[int, int]] = {}
    for idx in range(len(d.crossings)):
        comp = comp_of[idx]
        v, e = counts.get(comp, (0, 0))
        counts[comp] = (v + 1, e)
    for arc in d.arcs:
        comp = comp_of[producer[arc][0]]
        v, e = counts[comp]
        counts[comp] = (v, e + 1)
    return all(
        v - e + faces_of_comp.get(comp, 0) == 2 for comp, (v, e) in counts.items()
    )


RawCrossing = tuple[int, int, int, int, int]


def _split_components(
    crossings: Sequence[RawCrossing],
) -> list[tuple[RawCrossing, ...]]:
    """Connected components of the crossing graph (arcs as adjacency)."""
    uf = _UnionFind()
    touch: dict[int, int] = {}
    for idx, (_, ui, oi, uo, oo) in enumerate(crossings):
        uf.find(idx)
        for a in (ui, oi, uo, oo):
            if a in touch:
                uf.union(touch[a], idx)
            else:
                touch[a] = idx
    groups: dict[int, list[RawCrossing]] = {}
    for idx, c in enumerate(crossings):
        groups.setdefault(uf.find(idx), []).append(c)
    return [tuple(groups[r]) for r in sorted(groups)]


def _encode_from(
    crossings: Sequence[RawCrossing],
    consumer: Mapping[int, tuple[int, bool]],
    start: int,
) -> tuple:
    """Structural encoding of a connected piece walked from a given arc.

    Arcs are relabeled in discovery order along the oriented walk; when a
    link-component walk closes, the next start is the first unlabeled arc in
    crossing-encounter order, scanning ports in the fixed role order. The
    encoding determines the crossing list up to arc relabeling.
    """
    label: dict[int, int] = {}
    order: list[int] = []  # crossing indices in first-encounter order
    pos: dict[int, int] = {}

    def lab(a: int) -> None:
        if a not in label:
            label[a] = len(label)

    a = start
    total_arcs = len(consumer)
    while True:
        lab(a)
        idx, under = consumer[a]
        if idx not in pos:
            pos[idx] = len(order)
            order.append(idx)
        c = crossings[idx]
        a = c[3] if under else c[4]
        if a in label:
            if len(label) == total_arcs:
                break
            # walk closed; restart from the first unlabeled arc in structural order
            nxt = None
            for idx2 in order:
                for arc in crossings[idx2][1:]:
                    if arc not in label:
                        nxt = arc
                        break
                if nxt is not None:
                    break
            if nxt is None:
                break
            a = nxt
    body = []
    for idx in order:
        s, ui, oi, uo, oo = crossings[idx]
        body.append((s, label[ui], label[oi], label[uo], label[oo]))
    return tuple(body)


def _canonical_component(crossings: Sequence[RawCrossing]) -> tuple:
    consumer: dict[int, tuple[int, bool]] = {}
    for idx, (_, ui, oi, _uo, _oo) in enumerate(crossings):
        consumer[ui] = (idx, True)
        consumer[oi] = (idx, False)
    return min(_encode_from(crossings, consumer, a) for a in consumer)


def canonical_raw(
    crossings: Sequence[RawCrossing], free_loops: int
) -> tuple:
    """Canonical form: sorted per-component minimal encodings plus loop count."""
    comps = _split_components(crossings)
    return (tuple(sorted(_canonical_component(c) for c in comps)), free_loops)


def canonical_key(d: PlanarDiagram) -> tuple:
    """A relabeling-invariant key; equal iff the diagrams are isomorphic."""
    raw, loops = d.raw()
    return canonical_raw(raw, loops)


class PDParseError(ValueError):
    """Parse failure with a line/column position."""

    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


_TOKEN = re.compile(
    r"X\s*\[\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*;\s*([+-])\s*\]|O"
)


def parse_pd(text: str) -> PlanarDiagram:
    """Parse the PD text format: "X[a,b,c,d;+]" per crossing, "O" per circle.

    The bracket lists (under_in, over_in, under_out, over_out). Whitespace is
    free between tokens; invariant violations are reported with the position
    of the offending token.
    """

    def where(offset: int) -> tuple[int, int]:
        line = text.count("\n", 0, offset) + 1
        col = offset - (text.rfind("\n", 0, offset) + 1) + 1
        return line, col

    crossings: list[Crossing] = []
    positions: list[tuple[int, int]] = []
    free_loops = 0
    i = 0
    while i < len(text):
        if text[i].isspace():
            i += 1
            continue
        m = _TOKEN.match(text, i)
        if not m:
            line, col = where(i)
            raise PDParseError(f"expected 'X[a,b,c,d;+|-]' or 'O', found {text[i]!r}", line, col)
        if m.group(0) == "O":
            free_loops += 1
        else:
            a, b, c, dd = (int(m.group(k)) for k in range(1, 5))
            sign = 1 if m.group(5) == "+" else -1
            crossings.append(Crossing(sign, a, b, c, dd))
            positions.append(where(i))
        i = m.end()

    seen_in: dict[int, int] = {}
    seen_out: dict[int, int] = {}
    for k, c in enumerate(crossings):
        for arc in (c.under_in, c.over_in):
            if arc in seen_in:
                line, col = positions[k]
                raise PDParseError(f"arc {arc} consumed twice", line, col)
            seen_in[arc] = k
        for arc in (c.under_out, c.over_out):
            if arc in seen_out:
                line, col = positions[k]
                raise PDParseError(f"arc {arc} produced twice", line, col)
            seen_out[arc] = k
    for arc, k in seen_in.items():
        if arc not in seen_out:
            line, col = positions[k]
            raise PDParseError(f"arc {arc} is consumed but never produced", line, col)
    for arc, k in seen_out.items():
        if arc not in seen_in:
            line, col = positions[k]
            raise PDParseError(f"arc {arc} is produced but never consumed", line, col)
    return PlanarDiagram(crossings, free_loops)


def format_pd(d: PlanarDiagram) -> str:
    parts = [
        f"X[{c.under_in},{c.over_in},{c.under_out},{c.over_out};{'+' if c.sign > 0 else '-'}]"
        for c in d.crossings
    ]
    parts += ["O"] * d.free_loops
    return " ".join(parts)
