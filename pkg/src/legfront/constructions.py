"""Diagram constructions: grid Legendrianization, framed push-offs,
iterated positive Whitehead doubles.

The push-off starts from the "contact-shifted" 2-cable of the word: every
strand is twinned with its copy directly above, cusp pairs interleave with
one correcting crossing each, and crossings become four-crossing blocks.
That base satisfies lk(K, C) = tb(K) and tb(C) = tb(K).  The framing is
then adjusted at the tail of the word, just before the final cap block,
where the four strands are (C-upper, K-upper, C-lower, K-lower):

* a positive full twist  -- two X(1) crossings between the parallel upper
  strands -- raises lk by one and leaves tb(C) alone;
* a dip block [L2, X3, X3, X2, R1] sends a finger of C below K and back,
  lowering lk by one at the cost of two on tb(C) (one new right cusp and
  one negative self-crossing).

The Whitehead double replaces the final cap block with a positive clasp
that also reconnects the two curves: [X2, X2, R2, R1].
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConsistencyError, NotAKnot
from .front import (
    CROSSING,
    LEFT_CUSP,
    RIGHT_CUSP,
    FrontDiagram,
    FrontEvent,
    GridDiagram,
    L,
    OrientedFront,
    R,
    X,
    orient,
    validate,
)
from .invariants import linking, report, tb


@dataclass(frozen=True)
class PushOffResult:
    front: FrontDiagram  # two components: the knot and its companion
    oriented: OrientedFront
    knot_index: int
    companion_index: int
    framing: int
    stab_count: int  # dip blocks used when tb(K) > r


def _require_knot(of: OrientedFront) -> None:
    if of.component_count != 1:
        raise NotAKnot(of.component_count)


def _doubled_events(d: FrontDiagram):
    out = []
    for ev in d.events:
        i = ev.position
        if ev.kind == LEFT_CUSP:
            out += [L(2 * i - 1), L(2 * i + 1), X(2 * i)]
        elif ev.kind == RIGHT_CUSP:
            out += [X(2 * i), R(2 * i + 1), R(2 * i - 1)]
        else:
            out += [X(2 * i), X(2 * i - 1), X(2 * i + 1), X(2 * i)]
    return out


_DIP_BLOCK = (L(2), X(3), X(3), X(2), R(1))
_TAIL = 3  # the doubled word always ends with the cap block X2, R3, R1


def _cabled_events(d: FrontDiagram, twists: int, dips: int):
    events = _doubled_events(d)
    insert = len(events) - _TAIL
    block = [X(1)] * (2 * twists) + list(_DIP_BLOCK) * dips
    return events[:insert] + block + events[insert:]


def push_off(of: OrientedFront, r: int) -> PushOffResult:
    """Companion copy with prescribed linking number r.

    Postconditions (asserted): lk(K, K_r) = r and tb(K_r) - r =
    -|tb(K) - r|, with the knot's own invariants untouched.
    """
    _require_knot(of)
    tb_k = tb(of, 0)
    twists = max(0, r - tb_k)
    dips = max(0, tb_k - r)
    result = validate(_cabled_events(of.diagram, twists, dips))
    oriented = orient(result)
    if oriented.component_count != 2:
        raise ConsistencyError("cable did not produce two components")
    # the first doubled left-cusp block births the companion first
    companion = oriented.component_of((1, 1))
    knot = 1 - companion
    got_lk = linking(oriented, knot, companion)
    got_tb_c = tb(oriented, companion)
    if got_lk != r:
        raise ConsistencyError(f"push-off linking {got_lk} != {r}")
    if got_tb_c - r != -abs(tb_k - r):
        raise ConsistencyError(
            f"push-off tb {got_tb_c} violates tb-r = -|tb(K)-r| for r={r}"
        )
    if tb(oriented, knot) != tb_k:
        raise ConsistencyError("push-off changed the knot's tb")
    return PushOffResult(result, oriented, knot, companion, r, dips)


# Clasp both strands of the double, then cap C-upper to K-upper and
# C-lower to K-lower: the companion is traversed in reverse, so the two
# clasp crossings come out positive.
_CLASP_TAIL = (X(2), X(2), R(1), R(1))


def whitehead_double(of: OrientedFront, n: int = 1) -> OrientedFront:
    """Iterated positive Whitehead double.

    Each iteration joins the knot to its 0-framed companion through a
    positive clasp, so tb goes to tb(K) - |tb(K)| + 1 (asserted).
    """
    _require_knot(of)
    if n < 1:
        raise ValueError("need n >= 1 doubling iterations")
    cur = of
    for _ in range(n):
        tb_k = tb(cur, 0)
        twists = max(0, 0 - tb_k)
        dips = max(0, tb_k - 0)
        events = _cabled_events(cur.diagram, twists, dips)
        events = events[: len(events) - _TAIL] + list(_CLASP_TAIL)
        result = orient(validate(events))
        if result.component_count != 1:
            raise ConsistencyError("clasp failed to reconnect the double")
        want = tb_k - abs(tb_k) + 1
        if tb(result, 0) != want:
            raise ConsistencyError(
                f"double has tb {tb(result, 0)}, expected {want}"
            )
        cur = result
    return cur


# -- grid Legendrianization ------------------------------------------------

_DIRS = {"E": (1, 0), "N": (0, 1), "W": (-1, 0), "S": (0, -1)}
# After rotating the grid 45 degrees counterclockwise, corners whose two
# branches leave on the same horizontal side become cusps.
_LEFT_CUSP_CORNERS = frozenset({frozenset("ES")})
_RIGHT_CUSP_CORNERS = frozenset({frozenset("WN")})


def _grid_segments(g: GridDiagram):
    verticals = []
    horizontals = []
    for col, (xr, orow) in enumerate(zip(g.xs, g.os), start=1):
        verticals.append((col, min(xr, orow), max(xr, orow)))
    xcol = {r: c for c, r in enumerate(g.xs, start=1)}
    ocol = {r: c for c, r in enumerate(g.os, start=1)}
    for row in range(1, g.size + 1):
        a, b = xcol[row], ocol[row]
        horizontals.append((row, min(a, b), max(a, b)))
    return verticals, horizontals


def _corner_dirs(g: GridDiagram):
    """Directions in which the link leaves each marker point."""
    dirs = {}
    verticals, horizontals = _grid_segments(g)
    for col, lo, hi in verticals:
        dirs.setdefault((col, lo), set()).add("N")
        dirs.setdefault((col, hi), set()).add("S")
    for row, lo, hi in horizontals:
        dirs.setdefault((lo, row), set()).add("E")
        dirs.setdefault((hi, row), set()).add("W")
    return dirs


def legendrianize(g: GridDiagram) -> OrientedFront:
    """Rotate a grid diagram 45 degrees counterclockwise into a front.

    Vertical segments (the over strands) become the descending strands, so
    every crossing lands in front position; NE/SW-opening corners smooth
    out and the others become cusps.
    """
    verticals, horizontals = _grid_segments(g)
    events = []  # (u, v, kind, payload)
    for (col, row), ds in _corner_dirs(g).items():
        key = frozenset(ds)
        u, v = col - row, col + row
        if key in _LEFT_CUSP_CORNERS:
            events.append((u, v, "lcusp", None))
        elif key in _RIGHT_CUSP_CORNERS:
            events.append((u, v, "rcusp", None))
        else:
            # NE/SW-opening corner: the strand passes through, slope flips
            events.append((u, v, "smooth", None))
    for col, rlo, rhi in verticals:
        for row, clo, chi in horizontals:
            if rlo < row < rhi and clo < col < chi:
                events.append((col - row, col + row, "cross", None))
    events.sort(key=lambda e: (e[0], -e[1]))

    active = []  # ordered top to bottom: [u_ref, v_ref, slope]
    word = []

    def current_v(strand, u):
        return strand[1] + strand[2] * (u - strand[0])

    for (u, v, kind, _payload) in events:
        if kind == "lcusp":
            p = sum(1 for s in active if current_v(s, u) > v)
            active.insert(p, [u, v, 1])
            active.insert(p + 1, [u, v, -1])
            word.append(L(p + 1))
        elif kind == "rcusp":
            hit = [k for k, s in enumerate(active) if current_v(s, u) == v]
            if len(hit) != 2 or hit[1] != hit[0] + 1:
                raise ConsistencyError(f"right cusp at ({u},{v}) not adjacent")
            word.append(R(hit[0] + 1))
            del active[hit[0] : hit[0] + 2]
        elif kind == "smooth":
            hit = [k for k, s in enumerate(active) if current_v(s, u) == v]
            if len(hit) != 1:
                raise ConsistencyError(f"corner at ({u},{v}) is not simple")
            active[hit[0]] = [u, v, -active[hit[0]][2]]
        else:
            hit = [k for k, s in enumerate(active) if current_v(s, u) == v]
            if len(hit) != 2 or hit[1] != hit[0] + 1:
                raise ConsistencyError(f"crossing at ({u},{v}) not adjacent")
            k = hit[0]
            if active[k][2] != -1 or active[k + 1][2] != 1:
                raise ConsistencyError(f"crossing at ({u},{v}) has bad slopes")
            word.append(X(k + 1))
            active[k], active[k + 1] = active[k + 1], active[k]
    if active:
        raise ConsistencyError("grid sweep left open strands")
    return orient(validate(word))
