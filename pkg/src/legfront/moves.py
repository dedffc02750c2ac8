"""Local rewrites on event words.

Five families:

* Commute    -- adjacent events on disjoint strand pairs swap, with the
                usual +-2 position shifts across cusps;
* FrontR1    -- swallowtail birth/death: [L p, X p+1, R p] (pocket above
                the host strand) or [L p+1, X p, R p+1] (pocket below);
* FrontR2    -- a strand weaves past a cusp, trading one cusp event for
                the cusp plus two cancelling crossings;
* FrontR3    -- triple point: X i, X i+-1, X i  <->  X i+-1, X i, X i+-1;
* Stabilize  -- zigzag insertion [L p+1, R p] / [L p, R p+1]; the only
                rewrite that changes invariants (tb -1, rot +-1).

Every schema is validated semantically: with CHECK_POSTCONDITIONS on,
apply_move re-validates the word and re-computes the invariant report on
each call.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace

from .errors import ConsistencyError, InapplicableMove
from .front import (
    CROSSING,
    LEFT_CUSP,
    RIGHT_CUSP,
    FrontDiagram,
    FrontEvent,
    L,
    R,
    X,
    orient,
    validate,
)
from .invariants import report

COMMUTE = "Commute"
FRONT_R1 = "FrontR1"
FRONT_R2 = "FrontR2"
FRONT_R3 = "FrontR3"
STABILIZE = "Stabilize"

APPLY = "apply"
UNDO = "undo"

# Debug-mode postcondition checks; cheap relative to fuzz budgets.
CHECK_POSTCONDITIONS = True


@dataclass(frozen=True)
class MoveInstance:
    kind: str
    site: int  # event index of the window, or gap index for insertions
    variant: str
    direction: str = APPLY

    def __str__(self):
        return f"{self.kind}[{self.variant}]@{self.site}/{self.direction}"


def _commute_targets(a: FrontEvent, b: FrontEvent):
    """All ways to swap the adjacent pair a.b into b'.a' (same diagram)."""
    i, j = a.position, b.position
    ka, kb = a.kind, b.kind
    out = []
    if ka == CROSSING and kb == CROSSING:
        if abs(i - j) >= 2:
            out.append(("xx", X(j), X(i)))
    elif ka == CROSSING and kb == LEFT_CUSP:
        if j <= i:
            out.append(("above", L(j), X(i + 2)))
        elif j >= i + 2:
            out.append(("below", L(j), X(i)))
    elif ka == CROSSING and kb == RIGHT_CUSP:
        if j <= i - 2:
            out.append(("above", R(j), X(i - 2)))
        elif j >= i + 2:
            out.append(("below", R(j), X(i)))
    elif ka == LEFT_CUSP and kb == CROSSING:
        if j <= i - 2:
            out.append(("above", X(j), L(i)))
        elif j >= i + 2:
            out.append(("below", X(j - 2), L(i)))
    elif ka == LEFT_CUSP and kb == LEFT_CUSP:
        if j <= i:
            out.append(("above", L(j), L(i + 2)))
        elif j >= i + 2:
            out.append(("below", L(j - 2), L(i)))
    elif ka == LEFT_CUSP and kb == RIGHT_CUSP:
        if j <= i - 2:
            out.append(("above", R(j), L(i - 2)))
        elif j >= i + 2:
            out.append(("below", R(j - 2), L(i)))
    elif ka == RIGHT_CUSP and kb == CROSSING:
        if j <= i - 2:
            out.append(("above", X(j), R(i)))
        elif j >= i:
            out.append(("below", X(j + 2), R(i)))
    elif ka == RIGHT_CUSP and kb == LEFT_CUSP:
        if j <= i:
            out.append(("above", L(j), R(i + 2)))
        if j >= i:
            out.append(("below", L(j + 2), R(i)))
    elif ka == RIGHT_CUSP and kb == RIGHT_CUSP:
        if j <= i - 2:
            out.append(("above", R(j), R(i - 2)))
        elif j >= i:
            out.append(("below", R(j + 2), R(i)))
    return out


def _r1_block(p: int, variant: str):
    if variant == "up":
        return (L(p), X(p + 1), R(p))
    return (L(p + 1), X(p), R(p + 1))


def _stab_block(p: int, variant: str):
    if variant == "up":
        return (L(p), R(p + 1))
    return (L(p + 1), R(p))


def applicable_moves(d: FrontDiagram):
    """Enumerate every matching rewrite site in a fixed deterministic order.

    Insertion moves (FrontR1, Stabilize in the apply direction) use gap
    indices 0..N; window moves use the index of their first event.
    Commutes and FrontR3 are self-inverse families and enumerate as apply.
    """
    ev = d.events
    s = d.profile
    n = len(ev)
    moves = []

    for e in range(n - 1):
        for variant, _b, _a in _commute_targets(ev[e], ev[e + 1]):
            moves.append(MoveInstance(COMMUTE, e, variant))

    for g in range(n + 1):
        for p in range(1, s[g] + 1):
            moves.append(MoveInstance(FRONT_R1, g, f"up:{p}"))
            moves.append(MoveInstance(FRONT_R1, g, f"down:{p}"))
    for e in range(n - 2):
        a, b, c = ev[e], ev[e + 1], ev[e + 2]
        if (
            a.kind == LEFT_CUSP
            and b.kind == CROSSING
            and c.kind == RIGHT_CUSP
            and a.position == c.position
        ):
            if b.position == a.position + 1:
                moves.append(MoveInstance(FRONT_R1, e, f"up:{a.position}", UNDO))
            elif b.position == a.position - 1:
                moves.append(MoveInstance(FRONT_R1, e, f"down:{a.position - 1}", UNDO))

    for e in range(n):
        kind, i = ev[e].kind, ev[e].position
        if kind == RIGHT_CUSP:
            if s[e] >= i + 2:
                moves.append(MoveInstance(FRONT_R2, e, "below"))
            if i >= 2:
                moves.append(MoveInstance(FRONT_R2, e, "above"))
        elif kind == LEFT_CUSP:
            if i <= s[e]:
                moves.append(MoveInstance(FRONT_R2, e, "below"))
            if i >= 2:
                moves.append(MoveInstance(FRONT_R2, e, "above"))
    for e in range(n - 2):
        a, b, c = ev[e], ev[e + 1], ev[e + 2]
        if a.kind == CROSSING and b.kind == CROSSING and c.kind == RIGHT_CUSP:
            if a.position == b.position + 1 and c.position == a.position:
                moves.append(MoveInstance(FRONT_R2, e, "below", UNDO))
            if a.position == b.position - 1 and c.position == a.position:
                moves.append(MoveInstance(FRONT_R2, e, "above", UNDO))
        if a.kind == LEFT_CUSP and b.kind == CROSSING and c.kind == CROSSING:
            if b.position == a.position - 1 and c.position == a.position:
                moves.append(MoveInstance(FRONT_R2, e, "below", UNDO))
            if b.position == a.position + 1 and c.position == a.position:
                moves.append(MoveInstance(FRONT_R2, e, "above", UNDO))

    for e in range(n - 2):
        a, b, c = ev[e], ev[e + 1], ev[e + 2]
        if a.kind == b.kind == c.kind == CROSSING and a.position == c.position:
            if b.position == a.position + 1:
                moves.append(MoveInstance(FRONT_R3, e, "down"))
            elif b.position == a.position - 1:
                moves.append(MoveInstance(FRONT_R3, e, "up"))

    for g in range(n + 1):
        for p in range(1, s[g] + 1):
            moves.append(MoveInstance(STABILIZE, g, f"up:{p}"))
            moves.append(MoveInstance(STABILIZE, g, f"down:{p}"))
    for e in range(n - 1):
        a, b = ev[e], ev[e + 1]
        if a.kind == LEFT_CUSP and b.kind == RIGHT_CUSP:
            if b.position == a.position + 1:
                moves.append(MoveInstance(STABILIZE, e, f"up:{a.position}", UNDO))
            elif b.position == a.position - 1:
                moves.append(MoveInstance(STABILIZE, e, f"down:{b.position}", UNDO))
    return moves


def _splice(events, start, drop, block):
    return tuple(events[:start]) + tuple(block) + tuple(events[start + drop :])


def _variant_strand(variant: str):
    name, _, num = variant.partition(":")
    return name, int(num)


def apply_move(d: FrontDiagram, m: MoveInstance, check=None) -> FrontDiagram:
    """Apply one rewrite; raises InapplicableMove if the schema mismatches.

    With checks on (the default, see CHECK_POSTCONDITIONS) the result is
    re-validated and its invariant report compared against the input on
    every call.
    """
    ev = d.events
    n = len(ev)

    def bad(msg):
        return InapplicableMove(f"{m}: {msg}")

    if m.kind == COMMUTE:
        if m.direction != APPLY:
            raise bad("commutes enumerate as apply; invert with inverse_move")
        if not 0 <= m.site < n - 1:
            raise bad("site out of range")
        for variant, b2, a2 in _commute_targets(ev[m.site], ev[m.site + 1]):
            if variant == m.variant:
                out = _splice(ev, m.site, 2, (b2, a2))
                break
        else:
            raise bad("no such commutation here")

    elif m.kind == FRONT_R1:
        name, p = _variant_strand(m.variant)
        if m.direction == APPLY:
            if not 0 <= m.site <= n or not 1 <= p <= d.profile[m.site]:
                raise bad("no host strand at this gap")
            out = _splice(ev, m.site, 0, _r1_block(p, name))
        else:
            if m.site + 3 > n or ev[m.site : m.site + 3] != _r1_block(p, name):
                raise bad("no swallowtail block here")
            out = _splice(ev, m.site, 3, ())

    elif m.kind == FRONT_R2:
        if m.direction == APPLY:
            if not 0 <= m.site < n:
                raise bad("site out of range")
            cusp = ev[m.site]
            i = cusp.position
            s = d.profile[m.site]
            if cusp.kind == RIGHT_CUSP and m.variant == "below" and s >= i + 2:
                block = (X(i + 1), X(i), R(i + 1))
            elif cusp.kind == RIGHT_CUSP and m.variant == "above" and i >= 2:
                block = (X(i - 1), X(i), R(i - 1))
            elif cusp.kind == LEFT_CUSP and m.variant == "below" and i <= s:
                block = (L(i + 1), X(i), X(i + 1))
            elif cusp.kind == LEFT_CUSP and m.variant == "above" and i >= 2:
                block = (L(i - 1), X(i), X(i - 1))
            else:
                raise bad("cusp/strand configuration does not match")
            out = _splice(ev, m.site, 1, block)
        else:
            if m.site + 3 > n:
                raise bad("window out of range")
            a, b, c = ev[m.site : m.site + 3]
            j = a.position
            if a.kind == CROSSING and b.kind == CROSSING and c.kind == RIGHT_CUSP and c.position == j:
                if m.variant == "below" and b.position == j - 1:
                    block = (R(j - 1),)
                elif m.variant == "above" and b.position == j + 1:
                    block = (R(j + 1),)
                else:
                    raise bad("window does not match variant")
            elif a.kind == LEFT_CUSP and b.kind == CROSSING and c.kind == CROSSING and c.position == j:
                if m.variant == "below" and b.position == j - 1:
                    block = (L(j - 1),)
                elif m.variant == "above" and b.position == j + 1:
                    block = (L(j + 1),)
                else:
                    raise bad("window does not match variant")
            else:
                raise bad("no weave window here")
            out = _splice(ev, m.site, 3, block)

    elif m.kind == FRONT_R3:
        if m.site + 3 > n:
            raise bad("window out of range")
        a, b, c = ev[m.site : m.site + 3]
        if not (a.kind == b.kind == c.kind == CROSSING and a.position == c.position):
            raise bad("no triple-point window here")
        if abs(b.position - a.position) != 1:
            raise bad("middle crossing not adjacent")
        out = _splice(ev, m.site, 3, (X(b.position), X(a.position), X(b.position)))

    elif m.kind == STABILIZE:
        name, p = _variant_strand(m.variant)
        if m.direction == APPLY:
            if not 0 <= m.site <= n or not 1 <= p <= d.profile[m.site]:
                raise bad("no host strand at this gap")
            out = _splice(ev, m.site, 0, _stab_block(p, name))
        else:
            if m.site + 2 > n or ev[m.site : m.site + 2] != _stab_block(p, name):
                raise bad("no zigzag block here")
            out = _splice(ev, m.site, 2, ())
    else:
        raise bad(f"unknown move kind {m.kind}")

    result = validate(out)
    if CHECK_POSTCONDITIONS if check is None else check:
        _assert_postconditions(d, result, m)
    return result


def _profile_key(rep):
    # FrontR1/R2 trade bb against cusp counts; only (tb, rot, lk) persist.
    comps = sorted((c.tb, c.rot) for c in rep.components)
    lk = sorted(v for row in rep.lk for v in row)
    return comps, lk


def _assert_postconditions(before: FrontDiagram, after: FrontDiagram, m: MoveInstance):
    rb = report(orient(before))
    ra = report(orient(after))
    if m.kind == STABILIZE:
        delta = 1 if m.direction == APPLY else -1
        tb_b = sorted(c.tb for c in rb.components)
        tb_a = sorted(c.tb for c in ra.components)
        if sum(tb_a) != sum(tb_b) - delta:
            raise ConsistencyError(f"{m}: tb did not change by {-delta}")
        rot_b = sorted(abs(c.rot) for c in rb.components)
        rot_a = sorted(abs(c.rot) for c in ra.components)
        if sum(rot_a) - sum(rot_b) not in (-1, 1):
            raise ConsistencyError(f"{m}: |rot| changed by more than one")
        if sorted(v for row in rb.lk for v in row) != sorted(
            v for row in ra.lk for v in row
        ):
            raise ConsistencyError(f"{m}: stabilization changed linking")
    else:
        if _profile_key(rb) != _profile_key(ra):
            raise ConsistencyError(f"{m}: invariants changed: {rb} -> {ra}")


def inverse_move(d: FrontDiagram, m: MoveInstance) -> MoveInstance:
    """The instance that undoes m when applied to apply_move(d, m)."""
    if m.kind in (FRONT_R1, FRONT_R2, STABILIZE):
        return replace(m, direction=UNDO if m.direction == APPLY else APPLY)
    if m.kind == FRONT_R3:
        return replace(m, variant="up" if m.variant == "down" else "down")
    after = apply_move(d, m)
    a, b = d.events[m.site], d.events[m.site + 1]
    for variant, b2, a2 in _commute_targets(after.events[m.site], after.events[m.site + 1]):
        if (b2, a2) == (a, b):
            return MoveInstance(COMMUTE, m.site, variant)
    raise ConsistencyError(f"{m}: commute has no inverse case")


def fuzz(
    d: FrontDiagram,
    steps: int,
    seed: int,
    allow_stab: bool = False,
) -> FrontDiagram:
    """Apply `steps` uniformly random applicable moves, deterministically.

    Stabilize is excluded unless allow_stab is set, so the invariant report
    of the output matches the input exactly (asserted at the end of the
    walk; words can grow long, so the per-move report comparison is left
    to callers who want it).  Steps with no applicable move are skipped
    but still counted.
    """
    rng = random.Random(seed)
    cur = d
    for _ in range(steps):
        moves = applicable_moves(cur)
        if not allow_stab:
            moves = [m for m in moves if m.kind != STABILIZE]
        if not moves:
            continue
        cur = apply_move(cur, moves[rng.randrange(len(moves))], check=False)
    if not allow_stab:
        before = report(orient(d))
        after = report(orient(cur))
        if _profile_key(before) != _profile_key(after):
            raise ConsistencyError(
                f"fuzz(seed={seed}) changed invariants: {before} -> {after}"
            )
    return cur
