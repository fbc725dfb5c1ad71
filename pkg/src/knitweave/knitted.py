"""Knitted templates and diagrams.

A knitted template is a set of braid boxes (only their strand counts matter)
together with a crossing-free wiring: a bijection from box outputs to box
inputs. Filling each box with a braid word gives a knitted diagram; every
crossing of the compiled link diagram lives inside some box.

A template is valid when:

- the wiring is a perfect matching of outputs to inputs,
- the wiring is realizable in the plane with the boxes as obstacles
  (checked on the ribbon graph whose vertices are boxes with port rotation
  in_0 ... in_{n-1}, out_{n-1} ... out_0 counterclockwise),
- no Seifert circle passes through the same box twice,
- no two Seifert circles share two or more boxes.

The last two conditions are what makes the full-twist formula work: adjacent
strands inside a box lie on distinct circles that meet nowhere else, so a
reduced negative (or positive) permutation braid in a box leaves a
single-crossing circle pair that kills the corresponding extreme coefficient.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from random import Random
from typing import Sequence

from knitweave.braid import (
    BraidWord,
    Perm,
    full_twist_word,
    half_twist_word,
    reduced_word,
)
from knitweave.diagram import Crossing, PlanarDiagram
from knitweave.hecke import expand_word, top_coeff
from knitweave.laurent import LaurentVZ, LaurentZ
from knitweave.skein import homfly_framed

__all__ = [
    "Endpoint",
    "KnittedTemplate",
    "KnittedDiagram",
    "ValidationReport",
    "TemplateError",
    "TheoremReport",
    "PlaneBipartiteGraph",
    "validate",
    "seifert_count",
    "compile_diagram",
    "ft",
    "eval_hecke",
    "extreme_minus_fast",
    "verify_theorem",
    "from_bipartite_graph",
    "braid_closure_template",
    "braid_closure_knitted",
    "knitted_to_json",
    "knitted_from_json",
    "random_template",
    "random_knitted",
]

# an endpoint is (box index, position); inputs and outputs are kept in
# separate maps so the pair type stays flat
Endpoint = tuple[int, int]


@dataclass(frozen=True)
class KnittedTemplate:
    """Braid boxes plus a wiring bijection from outputs to inputs."""

    boxes: tuple[int, ...]
    wiring: tuple[tuple[Endpoint, Endpoint], ...]  # ((out box, pos), (in box, pos))

    def __post_init__(self) -> None:
        object.__setattr__(self, "boxes", tuple(int(n) for n in self.boxes))
        object.__setattr__(
            self,
            "wiring",
            tuple(
                sorted(
                    ((int(ob), int(op)), (int(ib), int(ip)))
                    for (ob, op), (ib, ip) in self.wiring
                )
            ),
        )
        if any(n < 1 for n in self.boxes):
            raise ValueError("every box needs at least one strand")
        outs = [src for src, _ in self.wiring]
        ins = [dst for _, dst in self.wiring]
        expected = {
            (b, p) for b, n in enumerate(self.boxes) for p in range(n)
        }
        if len(set(outs)) != len(outs) or set(outs) != expected:
            raise ValueError("wiring must use every box output exactly once")
        if len(set(ins)) != len(ins) or set(ins) != expected:
            raise ValueError("wiring must use every box input exactly once")

    @property
    def wiring_map(self) -> dict[Endpoint, Endpoint]:
        return dict(self.wiring)


@dataclass(frozen=True)
class KnittedDiagram:
    """A template with a braid word filled into each box."""

    template: KnittedTemplate
    words: tuple[BraidWord, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "words", tuple(self.words))
        if len(self.words) != len(self.template.boxes):
            raise ValueError("one word per box is required")
        for w, n in zip(self.words, self.template.boxes):
            if w.strands != n:
                raise ValueError(
                    f"word on {w.strands} strands placed in a {n}-strand box"
                )


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    failures: tuple[str, ...] = ()


class TemplateError(ValueError):
    def __init__(self, report: ValidationReport) -> None:
        super().__init__("invalid knitted template: " + "; ".join(report.failures))
        self.report = report


def _circles(t: KnittedTemplate) -> list[list[int]]:
    """Seifert circles of the template: each is the list of boxes it visits.

    With identity braids a strand enters in_p and leaves out_p, so circles
    are the orbits of wiring followed by identity pass-through.
    """
    wmap = t.wiring_map
    todo = set(wmap)
    circles: list[list[int]] = []
    while todo:
        start = min(todo)
        cur = start
        boxes: list[int] = []
        while True:
            todo.discard(cur)
            dst_box, dst_pos = wmap[cur]
            boxes.append(dst_box)
            cur = (dst_box, dst_pos)  # identity pass-through to the same position
            if cur == start:
                break
        circles.append(boxes)
    return circles


def _ribbon_planar(t: KnittedTemplate) -> bool:
    """Genus-0 test for the box-and-wire ribbon graph.

    Each box is a vertex with counterclockwise port rotation
    (in_0, ..., in_{n-1}, out_{n-1}, ..., out_0); each wire is an edge. A
    component with V boxes and E wires is planar iff V - E + F = 2.
    """
    rotation: dict[tuple[str, int, int], tuple[str, int, int]] = {}
    for b, n in enumerate(t.boxes):
        ports = [("in", b, p) for p in range(n)] + [
            ("out", b, p) for p in range(n - 1, -1, -1)
        ]
        for k, port in enumerate(ports):
            rotation[port] = ports[(k + 1) % len(ports)]

    wire_at: dict[tuple[str, int, int], int] = {}
    for w_id, ((ob, op), (ib, ip)) in enumerate(t.wiring):
        wire_at[("out", ob, op)] = w_id
        wire_at[("in", ib, ip)] = w_id
    wires = t.wiring

    parent = list(range(len(t.boxes)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (ob, _), (ib, _) in wires:
        ra, rb = find(ob), find(ib)
        if ra != rb:
            parent[ra] = rb

    faces: dict[int, int] = {}
    seen: set[tuple[int, bool]] = set()
    for w_id in range(len(wires)):
        for forward in (True, False):
            if (w_id, forward) in seen:
                continue
            comp = find(wires[w_id][0][0])
            faces[comp] = faces.get(comp, 0) + 1
            cur, fwd = w_id, forward
            while (cur, fwd) not in seen:
                seen.add((cur, fwd))
                (ob, op), (ib, ip) = wires[cur]
                port = ("in", ib, ip) if fwd else ("out", ob, op)
                nxt = rotation[port]
                cur = wire_at[nxt]
                fwd = nxt[0] == "out"

    v_e: dict[int, list[int]] = {}
    for b in range(len(t.boxes)):
        v_e.setdefault(find(b), [0, 0])[0] += 1
    for (ob, _), _ in wires:
        v_e[find(ob)][1] += 1
    return all(v - e + faces.get(comp, 0) == 2 for comp, (v, e) in v_e.items())


def validate(t: KnittedTemplate) -> ValidationReport:
    """Check all template conditions; failures are data, not exceptions."""
    failures: list[str] = []
    if not _ribbon_planar(t):
        failures.append("wiring is not realizable in the plane around the boxes")
    circles = _circles(t)
    for i, boxes in enumerate(circles):
        dups = sorted({b for b in boxes if boxes.count(b) > 1})
        if dups:
            failures.append(
                f"circle {i} passes through box(es) {dups} more than once"
            )
    incidence = [set(boxes) for boxes in circles]
    for i, j in itertools.combinations(range(len(circles)), 2):
        shared = sorted(incidence[i] & incidence[j])
        if len(shared) >= 2:
            failures.append(
                f"circles {i} and {j} share boxes {shared}"
            )
    return ValidationReport(not failures, tuple(failures))


def seifert_count(t: KnittedTemplate) -> int:
    """Number of Seifert circles of any diagram on this template."""
    report = validate(t)
    if not report.ok:
        raise TemplateError(report)
    return len(_circles(t))


def compile_diagram(k: KnittedDiagram, _validated: bool = False) -> PlanarDiagram:
    """PD code of the knitted diagram: box crossings joined per the wiring."""
    t = k.template
    if not _validated:
        report = validate(t)
        if not report.ok:
            raise TemplateError(report)

    arc_of_out: dict[Endpoint, int] = {}
    arc_of_in: dict[Endpoint, int] = {}
    for w_id, (src, dst) in enumerate(t.wiring):
        arc_of_out[src] = w_id
        arc_of_in[dst] = w_id

    fresh = len(t.wiring)
    raw: list[tuple[int, int, int, int, int]] = []
    merges: list[tuple[int, int]] = []
    for b, word in enumerate(k.words):
        n = t.boxes[b]
        cur = [arc_of_in[(b, p)] for p in range(n)]
        for g in word.letters:
            i = abs(g)
            a, c = cur[i - 1], cur[i]
            p_out, q_out = fresh, fresh + 1
            fresh += 2
            if g > 0:
                raw.append((1, c, a, p_out, q_out))
            else:
                raw.append((-1, a, c, q_out, p_out))
            cur[i - 1], cur[i] = p_out, q_out
        for p in range(n):
            merges.append((cur[p], arc_of_out[(b, p)]))

    parent: dict[int, int] = {}

    def find(x: int) -> int:
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b2 in merges:
        ra, rb = find(a), find(b2)
        if ra != rb:
            parent[ra] = rb

    port_arcs = {find(a) for (_, ui, oi, uo, oo) in raw for a in (ui, oi, uo, oo)}
    free_loops = len({find(a) for a in parent} - port_arcs)

    crossings = [
        Crossing(s, find(ui), find(oi), find(uo), find(oo))
        for (s, ui, oi, uo, oo) in raw
    ]
    return PlanarDiagram(crossings, free_loops)


def ft(k: KnittedDiagram) -> KnittedDiagram:
    """Prefix every box word with the positive full twist on its strands.

    The full twist is central, so the insertion position does not matter.
    """
    words = tuple(
        full_twist_word(w.strands) + w for w in k.words
    )
    return KnittedDiagram(k.template, words)


_TUPLE_CACHE: dict[tuple[KnittedTemplate, tuple[Perm, ...]], LaurentVZ] = {}


def _tuple_value(t: KnittedTemplate, perms: tuple[Perm, ...]) -> LaurentVZ:
    """H of the template filled with the positive permutation braids T_w."""
    key = (t, perms)
    cached = _TUPLE_CACHE.get(key)
    if cached is None:
        words = tuple(reduced_word(p) for p in perms)
        cached = homfly_framed(compile_diagram(KnittedDiagram(t, words), _validated=True))
        _TUPLE_CACHE[key] = cached
    return cached


def eval_hecke(k: KnittedDiagram) -> LaurentVZ:
    """H(k) through the Hecke expansion of every box word.

    Each box word expands in the positive permutation-braid basis; for each
    tuple of basis permutations with nonzero coefficients, the template is
    compiled with the corresponding reduced words and evaluated, and the
    coefficient-weighted values are summed. Agrees with evaluating the
    compiled diagram directly.
    """
    t = k.template
    report = validate(t)
    if not report.ok:
        raise TemplateError(report)
    expansions = [sorted(expand_word(w).coeffs.items()) for w in k.words]
    total = LaurentVZ.zero()
    for combo in itertools.product(*expansions):
        coeff = LaurentZ.one()
        for _, c in combo:
            coeff = coeff * c
        perms = tuple(w for w, _ in combo)
        total = total + coeff.as_vz() * _tuple_value(t, perms)
    return total


def extreme_minus_fast(k: KnittedDiagram) -> LaurentZ:
    """H- of the diagram by the product formula, without any skein recursion.

    H-(k) equals the product over boxes of the top (longest-element)
    coefficient of the half-twisted box word, times z^(1-s). Only the tuple
    of longest elements survives restriction to the bottom v-degree, because
    every other negative permutation braid leaves a circle pair with a single
    negative crossing inside its box.
    """
    t = k.template
    report = validate(t)
    if not report.ok:
        raise TemplateError(report)
    s = seifert_count(t)
    prod = LaurentZ.one()
    for word in k.words:
        x = expand_word(half_twist_word(word.strands) + word)
        c = top_coeff(x)
        if not c:
            return LaurentZ.zero()
        prod = prod * c
    return prod.shifted(1 - s)


@dataclass(frozen=True)
class TheoremReport:
    """Outcome of checking H-(D) = (-1)^(s-1) H+(FT D) on one diagram."""

    seifert_count: int
    sign: int
    framed: LaurentVZ
    framed_ft: LaurentVZ
    h_minus: LaurentZ
    h_plus_ft: LaurentZ
    fast_h_minus: LaurentZ
    equality_holds: bool
    fast_matches: bool

    @property
    def passed(self) -> bool:
        return self.equality_holds and self.fast_matches


def verify_theorem(k: KnittedDiagram) -> TheoremReport:
    """Full check of the signed full-twist equality on one knitted diagram."""
    s = seifert_count(k.template)
    h = eval_hecke(k)
    h_ft = eval_hecke(ft(k))
    h_minus = h.coeff_of_v(1 - s)
    h_plus_ft = h_ft.coeff_of_v(s - 1)
    sign = -1 if (s - 1) % 2 else 1
    fast = extreme_minus_fast(k)
    return TheoremReport(
        seifert_count=s,
        sign=sign,
        framed=h,
        framed_ft=h_ft,
        h_minus=h_minus,
        h_plus_ft=h_plus_ft,
        fast_h_minus=fast,
        equality_holds=(h_minus == sign * h_plus_ft),
        fast_matches=(fast == h_minus),
    )


@dataclass(frozen=True)
class PlaneBipartiteGraph:
    """A simple connected bipartite graph with a planar rotation system.

    ``rotations[v]`` lists the indices of the edges incident to vertex v in
    counterclockwise order around v.
    """

    n_vertices: int
    edges: tuple[tuple[int, int], ...]
    rotations: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        object.__setattr__(self, "rotations", tuple(tuple(r) for r in self.rotations))
        if len(self.rotations) != self.n_vertices:
            raise ValueError("one rotation per vertex is required")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise ValueError(f"edge ({u}, {v}) out of range")
            key = frozenset((u, v))
            if key in seen:
                raise ValueError(f"repeated edge between {u} and {v}")
            seen.add(key)
        for v, rot in enumerate(self.rotations):
            incident = sorted(i for i, e in enumerate(self.edges) if v in e)
            if sorted(rot) != incident:
                raise ValueError(
                    f"rotation at vertex {v} must permute its incident edges {incident}"
                )

    def bipartition(self) -> tuple[set[int], set[int]]:
        """Two-color the graph; raises on odd cycles or disconnection."""
        color: dict[int, int] = {0: 0}
        queue = [0]
        adjacency: dict[int, list[int]] = {v: [] for v in range(self.n_vertices)}
        for u, v in self.edges:
            adjacency[u].append(v)
            adjacency[v].append(u)
        while queue:
            u = queue.pop()
            for v in adjacency[u]:
                if v not in color:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    raise ValueError("graph is not bipartite")
        if len(color) != self.n_vertices:
            raise ValueError("graph is not connected")
        return (
            {v for v, c in color.items() if c == 0},
            {v for v, c in color.items() if c == 1},
        )


def from_bipartite_graph(g: PlaneBipartiteGraph) -> KnittedTemplate:
    """Reverse Seifert's algorithm on a plane simple bipartite graph.

    One Seifert circle per vertex, one 2-strand box per edge; the circle of a
    part-0 vertex threads its boxes in rotation order and a part-1 circle in
    reversed rotation order, which makes the two strands of every box
    parallel. Crossing signs and orientations stay free: the caller fills the
    boxes with words.
    """
    part0, _part1 = g.bipartition()
    wiring: list[tuple[Endpoint, Endpoint]] = []
    for v, rot in enumerate(g.rotations):
        pos = 0 if v in part0 else 1
        order = rot if v in part0 else tuple(reversed(rot))
        k = len(order)
        for t_idx in range(k):
            src = (order[t_idx], pos)
            dst = (order[(t_idx + 1) % k], pos)
            wiring.append((src, dst))
    return KnittedTemplate(tuple(2 for _ in g.edges), tuple(wiring))


def braid_closure_template(n: int) -> KnittedTemplate:
    """The single-box template whose diagrams are braid closures."""
    return KnittedTemplate((n,), tuple(((0, p), (0, p)) for p in range(n)))


def braid_closure_knitted(word: BraidWord) -> KnittedDiagram:
    return KnittedDiagram(braid_closure_template(word.strands), (word,))


_ENDPOINT_RE = re.compile(r"^b(\d+)\.(in|out)(\d+)$")


def knitted_to_json(k: KnittedDiagram) -> dict:
    return {
        "boxes": [
            {"strands": n, "word": list(w.letters)}
            for n, w in zip(k.template.boxes, k.words)
        ],
        "wiring": [
            [f"b{ob}.out{op}", f"b{ib}.in{ip}"]
            for (ob, op), (ib, ip) in k.template.wiring
        ],
    }


def _parse_endpoint(text: str, kind: str, n_boxes: Sequence[int]) -> Endpoint:
    m = _ENDPOINT_RE.match(text)
    if not m:
        raise ValueError(f"bad endpoint {text!r}; expected b<i>.{kind}<j>")
    box, k, pos = int(m.group(1)), m.group(2), int(m.group(3))
    if k != kind:
        raise ValueError(f"endpoint {text!r} should be an {kind} endpoint")
    if box >= len(n_boxes):
        raise ValueError(f"endpoint {text!r} names a box that does not exist")
    if pos >= n_boxes[box]:
        raise ValueError(f"endpoint {text!r} exceeds the box's strand count")
    return (box, pos)


def knitted_from_json(obj: dict) -> KnittedDiagram:
    if not isinstance(obj, dict) or "boxes" not in obj or "wiring" not in obj:
        raise ValueError("knitted JSON needs 'boxes' and 'wiring'")
    strands: list[int] = []
    words: list[BraidWord] = []
    for i, box in enumerate(obj["boxes"]):
        try:
            n = int(box["strands"])
            letters = tuple(int(g) for g in box.get("word", []))
        except (TypeError, KeyError, ValueError) as exc:
            raise ValueError(f"box {i}: expected strands and a word list") from exc
        strands.append(n)
        words.append(BraidWord(n, letters))
    wiring = []
    for pair in obj["wiring"]:
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise ValueError(f"wiring entry {pair!r} must be a [out, in] pair")
        src = _parse_endpoint(pair[0], "out", strands)
        dst = _parse_endpoint(pair[1], "in", strands)
        wiring.append((src, dst))
    template = KnittedTemplate(tuple(strands), tuple(wiring))  # enforces matching
    return KnittedDiagram(template, tuple(words))


def random_template(
    rng: Random, max_boxes: int, max_strands: int, max_tries: int = 4000
) -> tuple[KnittedTemplate, int]:
    """Rejection-sample a valid template; returns it with the try count.

    The box profile is drawn first and wirings are resampled for that fixed
    profile; otherwise hard profiles (valid wirings are rare for three
    3-strand boxes) would be crowded out by easy ones.
    """
    total = 0
    for _ in range(20):
        boxes = tuple(
            rng.randint(1, max_strands) for _ in range(rng.randint(1, max_boxes))
        )
        endpoints = [(b, p) for b, n in enumerate(boxes) for p in range(n)]
        for _ in range(max_tries):
            total += 1
            targets = list(endpoints)
            rng.shuffle(targets)
            t = KnittedTemplate(boxes, tuple(zip(endpoints, targets)))
            if validate(t).ok:
                return t, total
    raise RuntimeError(f"no valid template found in {total} tries")


def random_knitted(
    rng: Random, max_boxes: int, max_strands: int, max_word_len: int
) -> tuple[KnittedDiagram, int]:
    """A random valid knitted diagram plus the rejection-sampling try count."""
    t, tries = random_template(rng, max_boxes, max_strands)
    words = []
    for n in t.boxes:
        if n == 1:
            words.append(BraidWord(1, ()))
            continue
        length = rng.randint(0, max_word_len)
        letters = tuple(
            rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)
        )
        words.append(BraidWord(n, letters))
    return KnittedDiagram(t, tuple(words)), tries
