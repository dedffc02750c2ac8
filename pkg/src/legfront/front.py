"""Event-word model for closed Legendrian front diagrams.

A front is encoded plat-style as a left-to-right word of events acting on
horizontal strands numbered from the top, starting and ending with zero
strands:

* ``L i`` -- left cusp, births two strands at positions ``i, i+1``;
* ``R i`` -- right cusp, caps the adjacent strands ``i, i+1``;
* ``X i`` -- crossing of strands ``i, i+1``; the strand descending from
  position ``i`` to ``i+1`` is in front (the usual convention for fronts
  of the standard contact structure, where the more negative slope wins).

Over/under data is therefore never stored: it is recovered from slope.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import (
    ConsistencyError,
    EmptyWord,
    PositionOutOfRange,
    UnbalancedClosure,
)

LEFT_CUSP = "L"
RIGHT_CUSP = "R"
CROSSING = "X"

RIGHTWARD = 1
LEFTWARD = -1

# A strand segment lives at slice t (after t events) in vertical position p,
# counted from the top starting at 1.
Segment = tuple  # (t, p)


@dataclass(frozen=True, order=True)
class FrontEvent:
    kind: str
    position: int

    def __post_init__(self):
        if self.kind not in (LEFT_CUSP, RIGHT_CUSP, CROSSING):
            raise ValueError(f"unknown event kind {self.kind!r}")
        if self.position < 1:
            raise ValueError(f"positions are 1-based, got {self.position}")

    def __str__(self):
        return f"{self.kind}{self.position}"


def L(i: int) -> FrontEvent:
    return FrontEvent(LEFT_CUSP, i)


def R(i: int) -> FrontEvent:
    return FrontEvent(RIGHT_CUSP, i)


def X(i: int) -> FrontEvent:
    return FrontEvent(CROSSING, i)


@dataclass(frozen=True)
class FrontDiagram:
    """A validated event word together with its strand-count profile."""

    events: tuple
    profile: tuple  # strand counts s_0 .. s_N, s_0 = s_N = 0

    def __len__(self):
        return len(self.events)

    def __str__(self):
        return " ".join(str(e) for e in self.events)

    @property
    def max_strands(self) -> int:
        return max(self.profile)

    def segments(self) -> Iterator[Segment]:
        for t, s in enumerate(self.profile):
            for p in range(1, s + 1):
                yield (t, p)


def validate(word: Sequence[FrontEvent]) -> FrontDiagram:
    """Check the word against the strand-count grammar.

    Raises EmptyWord, PositionOutOfRange or UnbalancedClosure; on success
    returns the diagram with its profile.
    """
    events = tuple(word)
    if not events:
        raise EmptyWord("a front needs at least one left and one right cusp")
    s = 0
    profile = [0]
    for idx, ev in enumerate(events):
        i = ev.position
        if ev.kind == LEFT_CUSP:
            if not 1 <= i <= s + 1:
                raise PositionOutOfRange(idx, i, s, "left cusp")
            s += 2
        elif ev.kind == RIGHT_CUSP:
            if not 1 <= i <= s - 1:
                raise PositionOutOfRange(idx, i, s, "right cusp")
            s -= 2
        else:
            if not 1 <= i <= s - 1:
                raise PositionOutOfRange(idx, i, s, "crossing")
        profile.append(s)
    if s != 0:
        raise UnbalancedClosure(s)
    return FrontDiagram(events, tuple(profile))


def step(diagram: FrontDiagram, t: int, p: int, direction: int):
    """Advance one event along the traversal from segment (t, p).

    Returns the next (t, p, direction) state.  Cusps reverse the horizontal
    direction, crossings preserve it.
    """
    ev = diagram.events[t] if direction == RIGHTWARD else diagram.events[t - 1]
    i = ev.position
    if direction == RIGHTWARD:
        if ev.kind == LEFT_CUSP:
            return (t + 1, p if p < i else p + 2, RIGHTWARD)
        if ev.kind == RIGHT_CUSP:
            if p == i:
                return (t, i + 1, LEFTWARD)
            if p == i + 1:
                return (t, i, LEFTWARD)
            return (t + 1, p if p < i else p - 2, RIGHTWARD)
        if p == i:
            return (t + 1, i + 1, RIGHTWARD)
        if p == i + 1:
            return (t + 1, i, RIGHTWARD)
        return (t + 1, p, RIGHTWARD)
    else:
        if ev.kind == LEFT_CUSP:
            if p == i:
                return (t, i + 1, RIGHTWARD)
            if p == i + 1:
                return (t, i, RIGHTWARD)
            return (t - 1, p if p < i else p - 2, LEFTWARD)
        if ev.kind == RIGHT_CUSP:
            return (t - 1, p if p < i else p + 2, LEFTWARD)
        if p == i:
            return (t - 1, i + 1, LEFTWARD)
        if p == i + 1:
            return (t - 1, i, LEFTWARD)
        return (t - 1, p, LEFTWARD)


def _walk(diagram: FrontDiagram, t0: int, p0: int, d0: int):
    """Yield the closed traversal through (t0, p0, d0) as a list of states."""
    states = []
    t, p, d = t0, p0, d0
    while True:
        states.append((t, p, d))
        t, p, d = step(diagram, t, p, d)
        if (t, p, d) == (t0, p0, d0):
            return states
        if len(states) > 4 * len(diagram.profile) * (diagram.max_strands + 1):
            raise ConsistencyError("traversal failed to close")


def trace_components(diagram: FrontDiagram):
    """Partition strand segments into cyclically ordered components.

    Components are sorted by the smallest event index they participate in;
    each component is a tuple of (t, p) segments in traversal order starting
    from its smallest segment.
    """
    seen = {}
    cycles = []
    for seg in diagram.segments():
        if seg in seen:
            continue
        states = _walk(diagram, seg[0], seg[1], RIGHTWARD)
        idx = len(cycles)
        for (t, p, _d) in states:
            if (t, p) in seen:
                raise ConsistencyError(f"segment {(t, p)} traced twice")
            seen[(t, p)] = idx
        cycles.append(states)
    total = sum(diagram.profile)
    if len(seen) != total:
        raise ConsistencyError("traversal missed segments")
    order = sorted(range(len(cycles)), key=lambda k: _first_event(diagram, cycles[k], seen))
    return [_canonical_cycle(cycles[k]) for k in order]


def _first_event(diagram, states, seen_unused):
    segs = {(t, p) for (t, p, _d) in states}
    for e, ev in enumerate(diagram.events):
        i = ev.position
        if ev.kind == LEFT_CUSP:
            if (e + 1, i) in segs:
                return e
        elif ev.kind == RIGHT_CUSP:
            if (e, i) in segs:
                return e
        else:
            if (e, i) in segs or (e, i + 1) in segs:
                return e
    raise ConsistencyError("component participates in no event")


def _canonical_cycle(states):
    segs = [(t, p) for (t, p, _d) in states]
    k = segs.index(min(segs))
    return tuple(segs[k:] + segs[:k])


@dataclass(frozen=True)
class OrientedFront:
    """A front plus a coherent traversal direction for every segment."""

    diagram: FrontDiagram
    components: tuple  # tuple of segment cycles, traversal order
    direction: dict  # segment -> RIGHTWARD | LEFTWARD
    choices: tuple  # one flip bit per component

    @property
    def component_count(self) -> int:
        return len(self.components)

    def component_of(self, seg: Segment) -> int:
        return self._membership[seg]

    @property
    def _membership(self):
        m = self.__dict__.get("_membership_cache")
        if m is None:
            m = {}
            for k, cyc in enumerate(self.components):
                for seg in cyc:
                    m[seg] = k
            self.__dict__["_membership_cache"] = m
        return m


def orient(diagram: FrontDiagram, choices: Iterable = ()) -> OrientedFront:
    """Assign consistent directions to every component.

    With an unset choice bit, a component is oriented so that the upper
    strand born at its smallest-index left cusp runs rightward; a set bit
    reverses the whole component.
    """
    comps = trace_components(diagram)
    given = [bool(b) for b in choices]
    bits = (given + [False] * len(comps))[: len(comps)]

    direction = {}
    cycles = []
    for k, cyc in enumerate(comps):
        states = _walk(diagram, cyc[0][0], cyc[0][1], RIGHTWARD)
        dirs = {(t, p): d for (t, p, d) in states}
        anchor = _default_anchor(diagram, set(cyc))
        flip = dirs[anchor] != RIGHTWARD
        if bits[k]:
            flip = not flip
        if flip:
            dirs = {seg: -d for seg, d in dirs.items()}
            states = _reverse_states(states)
        direction.update(dirs)
        cycles.append(_canonical_oriented_cycle(states))
    return OrientedFront(diagram, tuple(cycles), direction, tuple(bits))


def _default_anchor(diagram, segs):
    for e, ev in enumerate(diagram.events):
        if ev.kind == LEFT_CUSP and (e + 1, ev.position) in segs:
            return (e + 1, ev.position)
    raise ConsistencyError("component has no left cusp")


def _reverse_states(states):
    return [states[0]] + states[:0:-1]


def _canonical_oriented_cycle(states):
    segs = [(t, p) for (t, p, _d) in states]
    k = segs.index(min(segs))
    return tuple(segs[k:] + segs[:k])


def component_states(of: OrientedFront, k: int):
    """Traversal cycle of component k as (t, p, direction) states."""
    t, p = of.components[k][0]
    return _walk(of.diagram, t, p, of.direction[(t, p)])


def crossings(of: OrientedFront):
    """Yield (event index, over component, under component, sign) per crossing.

    The over strand enters at (e, i) and descends; the sign is +1 exactly
    when the two strands run in the same horizontal direction.
    """
    d = of.diagram
    for e, ev in enumerate(d.events):
        if ev.kind != CROSSING:
            continue
        i = ev.position
        over_seg = (e, i)
        under_seg = (e, i + 1)
        sign = of.direction[over_seg] * of.direction[under_seg]
        yield e, of.component_of(over_seg), of.component_of(under_seg), sign


def cusps(of: OrientedFront):
    """Yield (event index, kind, component, sense) with sense 'down' or 'up'.

    Traversal passing from the upper branch to the lower branch makes the
    cusp downward.
    """
    d = of.diagram
    for e, ev in enumerate(d.events):
        i = ev.position
        if ev.kind == RIGHT_CUSP:
            upper = (e, i)
            down = of.direction[upper] == RIGHTWARD
        elif ev.kind == LEFT_CUSP:
            upper = (e + 1, i)
            down = of.direction[upper] == LEFTWARD
        else:
            continue
        yield e, ev.kind, of.component_of(upper), "down" if down else "up"


@dataclass(frozen=True)
class GridDiagram:
    """Rectangular diagram given by the X and O marker rows per column.

    ``xs[i]`` / ``os[i]`` is the 1-based row of the X / O marker in column
    ``i+1``; each is a permutation of 1..n and no cell carries both markers.
    """

    xs: tuple
    os: tuple

    def __post_init__(self):
        n = len(self.xs)
        if n < 2:
            raise ValueError("grid size must be at least 2")
        if len(self.os) != n:
            raise ValueError("xs and os must have equal length")
        if sorted(self.xs) != list(range(1, n + 1)) or sorted(self.os) != list(
            range(1, n + 1)
        ):
            raise ValueError("xs and os must each be a permutation of 1..n")
        for i, (x, o) in enumerate(zip(self.xs, self.os), start=1):
            if x == o:
                raise ValueError(f"column {i} holds both markers in row {x}")

    @property
    def size(self) -> int:
        return len(self.xs)
