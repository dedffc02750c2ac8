"""Generic (over/under-annotated) diagram codes and the front exporter.

A GenericCode is a planar-diagram structure that no longer knows anything
about slopes or cusps: crossings with four ends in fixed geometric slots,
arcs labelled PD-style, and explicit end-to-end connectivity.  Front
exports always place the over strand on the ul-lr diagonal (it is the
descending strand); hand-entered PD codes are normalised into the same
slots with the incoming under arc at ll.

Slot layout around a crossing, counterclockwise: ur, ul, ll, lr.
The over strand occupies ul & lr; the under strand ll & ur.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ConsistencyError, MalformedCode
from .front import (
    CROSSING,
    LEFTWARD,
    RIGHTWARD,
    OrientedFront,
    component_states,
)

SLOTS_CCW = ("ur", "ul", "ll", "lr")
OVER_SLOTS = ("ul", "lr")
UNDER_SLOTS = ("ll", "ur")


@dataclass(frozen=True)
class CrossingRecord:
    arcs: dict  # slot -> arc id
    flags: dict  # slot -> "in" | "out"
    over_component: int
    under_component: int
    sign: int

    def under_in_slot(self) -> str:
        return "ll" if self.flags["ll"] == "in" else "ur"

    def pd_tuple(self):
        start = SLOTS_CCW.index(self.under_in_slot())
        order = SLOTS_CCW[start:] + SLOTS_CCW[:start]
        return tuple(self.arcs[s] for s in order)


@dataclass(frozen=True)
class GenericCode:
    crossings: tuple  # CrossingRecord, one per crossing
    edges: tuple  # ((crossing, slot), (crossing, slot)) arc pieces
    arc_component: dict  # arc id -> component index
    free_loops: int  # components without any crossing passage
    components: int

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def pd(self):
        return tuple(c.pd_tuple() for c in self.crossings)


def validate_code(code: GenericCode) -> GenericCode:
    """Structural checks used by the oracles before they trust a code."""
    ends = set()
    for i, c in enumerate(code.crossings):
        if set(c.arcs) != set(SLOTS_CCW) or set(c.flags) != set(SLOTS_CCW):
            raise MalformedCode(f"crossing {i} lacks the four slots")
        for pair in (OVER_SLOTS, UNDER_SLOTS):
            kinds = sorted(c.flags[s] for s in pair)
            if kinds != ["in", "out"]:
                raise MalformedCode(f"crossing {i}: strand without in/out ends")
        if c.sign not in (1, -1):
            raise MalformedCode(f"crossing {i}: sign {c.sign}")
        for s in SLOTS_CCW:
            ends.add((i, s))
    touched = set()
    for a, b in code.edges:
        if a not in ends or b not in ends:
            raise MalformedCode(f"edge {a}-{b} references a missing end")
        touched.update((a, b))
    if code.crossings and touched != ends:
        raise MalformedCode("edges do not cover every crossing end exactly")
    if code.free_loops < 0 or code.components < code.free_loops:
        raise MalformedCode("inconsistent loop counts")
    return code


def to_generic_code(of: OrientedFront) -> GenericCode:
    """Materialise slope-determined over strands into a GenericCode."""
    d = of.diagram
    crossing_index = {}
    for e, ev in enumerate(d.events):
        if ev.kind == CROSSING:
            crossing_index[e] = len(crossing_index)

    slot_arc = {}
    slot_flag = {}
    over_comp = {}
    under_comp = {}
    edges = []
    arc_component = {}
    free_loops = 0
    next_arc = 1

    for k in range(of.component_count):
        states = component_states(of, k)
        passages = []
        for (t, p, direction) in states:
            if direction == RIGHTWARD:
                ev = d.events[t]
                if ev.kind != CROSSING or p not in (ev.position, ev.position + 1):
                    continue
                c = crossing_index[t]
                if p == ev.position:
                    passages.append((c, "over", "ul", "lr"))
                else:
                    passages.append((c, "under", "ll", "ur"))
            else:
                ev = d.events[t - 1]
                if ev.kind != CROSSING or p not in (ev.position, ev.position + 1):
                    continue
                c = crossing_index[t - 1]
                if p == ev.position:
                    passages.append((c, "under", "ur", "ll"))
                else:
                    passages.append((c, "over", "lr", "ul"))
        if not passages:
            free_loops += 1
            continue
        for (c, role, slot_in, slot_out) in passages:
            slot_flag[(c, slot_in)] = "in"
            slot_flag[(c, slot_out)] = "out"
            if role == "over":
                over_comp[c] = k
            else:
                under_comp[c] = k
        # PD-style edge labels: one per gap between consecutive passages
        n = len(passages)
        for idx in range(n):
            c, _role, _si, so = passages[idx]
            c2, _role2, si2, _so2 = passages[(idx + 1) % n]
            edges.append(((c, so), (c2, si2)))
            label = next_arc + idx
            slot_arc[(c, so)] = label
            slot_arc[(c2, si2)] = label
            arc_component[label] = k
        next_arc += n

    records = []
    for e in sorted(crossing_index):
        c = crossing_index[e]
        arcs = {}
        flags = {}
        for s in SLOTS_CCW:
            if (c, s) not in slot_arc:
                raise ConsistencyError(f"crossing {c}: slot {s} never visited")
            arcs[s] = slot_arc[(c, s)]
            flags[s] = slot_flag[(c, s)]
        i = d.events[e].position
        sign = of.direction[(e, i)] * of.direction[(e, i + 1)]
        records.append(
            CrossingRecord(arcs, flags, over_comp[c], under_comp[c], sign)
        )
    return validate_code(
        GenericCode(
            tuple(records),
            tuple(edges),
            arc_component,
            free_loops,
            of.component_count,
        )
    )


def from_pd(tuples, signs=None, free_loops: int = 0) -> GenericCode:
    """Build a GenericCode from PD notation.

    Each 4-tuple lists arc ids counterclockwise starting at the incoming
    under arc; every arc id must occur exactly twice overall (components
    that never pass under cannot be described this way).  With standard
    sequential arc numbering the crossing signs are derived from which of
    the two over arcs continues the numbering; pass them explicitly
    otherwise.
    """
    tuples = [tuple(t) for t in tuples]
    if signs is None:
        m = 2 * len(tuples)
        signs = []
        for (a, b, c_, d_) in tuples:
            if b % m == (d_ + 1) % m:
                signs.append(1)
            elif d_ % m == (b + 1) % m:
                signs.append(-1)
            else:
                raise MalformedCode(
                    f"cannot infer sign of X({a},{b},{c_},{d_}); pass signs"
                )
    signs = list(signs)
    if len(tuples) != len(signs):
        raise MalformedCode("need one sign per crossing")
    records = []
    for (a, b, c_, d_), sign in zip(tuples, signs):
        arcs = {"ll": a, "lr": b, "ur": c_, "ul": d_}
        flags = {"ll": "in", "ur": "out"}
        if sign == 1:
            flags["ul"] = "in"
            flags["lr"] = "out"
        elif sign == -1:
            flags["lr"] = "in"
            flags["ul"] = "out"
        else:
            raise MalformedCode(f"sign must be +-1, got {sign}")
        records.append(CrossingRecord(arcs, flags, -1, -1, sign))

    by_arc = {}
    for ci, rec in enumerate(records):
        for slot in SLOTS_CCW:
            by_arc.setdefault(rec.arcs[slot], []).append((ci, slot))
    edges = []
    for arc, ends in sorted(by_arc.items()):
        outs = [e for e in ends if records[e[0]].flags[e[1]] == "out"]
        ins = [e for e in ends if records[e[0]].flags[e[1]] == "in"]
        if len(outs) != 1 or len(ins) != 1:
            raise MalformedCode(f"arc {arc} does not occur exactly twice")
        edges.append((outs[0], ins[0]))

    comp_of_arc, over_comp, under_comp, n_comps = _trace_code(records, edges)
    recs = tuple(
        CrossingRecord(r.arcs, r.flags, over_comp[i], under_comp[i], r.sign)
        for i, r in enumerate(records)
    )
    return validate_code(
        GenericCode(recs, tuple(edges), comp_of_arc, free_loops, n_comps + free_loops)
    )


def _trace_code(records, edges):
    """Recover component labels by walking edges and crossing passages."""
    succ = {}
    for a, b in edges:
        succ[a] = b
    through = {}
    for ci, rec in enumerate(records):
        for (s_in, s_out) in (("ll", "ur"), ("ur", "ll"), ("ul", "lr"), ("lr", "ul")):
            if rec.flags[s_in] == "in":
                through[(ci, s_in)] = (ci, s_out)
    comp_of_arc = {}
    over_comp = {}
    under_comp = {}
    comp = 0
    visited = set()
    starts = sorted(through)
    for start in starts:
        if start in visited:
            continue
        end = start
        while True:
            visited.add(end)
            ci, slot = end
            if slot in UNDER_SLOTS:
                under_comp[ci] = comp
            else:
                over_comp[ci] = comp
            comp_of_arc[records[ci].arcs[slot]] = comp
            out = through[end]
            comp_of_arc[records[ci].arcs[out[1]]] = comp
            end = succ[out]
            if end == start:
                break
        comp += 1
    return comp_of_arc, over_comp, under_comp, comp


def pd_text(code: GenericCode) -> str:
    """Serialise to a small PD-based text form (crossings, signs, loops)."""
    xs = ", ".join("X({},{},{},{})".format(*t) for t in code.pd())
    signs = " ".join(f"{c.sign:+d}" for c in code.crossings)
    return f"PD[{xs}]\nsigns: {signs}\nloops: {code.free_loops}\n"


_PD_RE = re.compile(r"X\((\d+),(\d+),(\d+),(\d+)\)")


def parse_pd_text(text: str) -> GenericCode:
    lines = [ln.strip() for ln in text.strip().splitlines()]
    if not lines or not lines[0].startswith("PD["):
        raise MalformedCode("expected a PD[...] header line")
    tuples = [tuple(map(int, m.groups())) for m in _PD_RE.finditer(lines[0])]
    signs = []
    loops = 0
    for ln in lines[1:]:
        if ln.startswith("signs:"):
            signs = [int(tok) for tok in ln.split(":", 1)[1].split()]
        elif ln.startswith("loops:"):
            loops = int(ln.split(":", 1)[1])
    if not tuples and loops == 0:
        raise MalformedCode("empty code")
    if not tuples:
        return GenericCode((), (), {}, loops, loops)
    return from_pd(tuples, signs, loops)
