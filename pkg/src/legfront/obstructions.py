"""Computable obstructions: genus bounds, (non-)sliceness, Stein framings.

All three reduce to integer arithmetic on tb and rot.  For a connected
surface with one boundary circle, -chi(F) = 2g - 1, so the bound
-chi(F) >= (tb - f) + |rot| becomes g >= (tb - f + |rot| + 1) / 2; a slice
disk is the case g = 0, f = 0.  A 2-handle framing is Stein-realizable at
exactly tb - 1, and any deficit can be made up by stabilizing the
attaching knot (each stabilization lowers tb by one).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConsistencyError, DuplicateHandle, NotAKnot, UnknownComponent
from .front import FrontDiagram, OrientedFront, orient
from .invariants import rot as rot_of
from .invariants import tb as tb_of
from .moves import APPLY, STABILIZE, MoveInstance, applicable_moves, apply_move

NOT_SLICE = "NotSlice"
INCONCLUSIVE = "Inconclusive"

EXACT_STEIN = "ExactStein"
STEIN_AFTER_STABILIZATIONS = "SteinAfterStabilizations"
NOT_CERTIFIED = "NotCertified"


@dataclass(frozen=True)
class GenusBound:
    component: int
    framing: int
    tb: int
    rot: int
    bound: int  # lower bound for the genus of a one-boundary surface
    slice_verdict: str

    def to_dict(self):
        return {
            "component": self.component,
            "framing": self.framing,
            "tb": self.tb,
            "rot": self.rot,
            "bound": self.bound,
            "slice_verdict": self.slice_verdict,
        }


@dataclass(frozen=True)
class SliceCertificate:
    verdict: str
    tb: int
    rot: int
    inequality: str  # the instantiated obstruction, human-readable

    def to_dict(self):
        return {
            "verdict": self.verdict,
            "tb": self.tb,
            "rot": self.rot,
            "inequality": self.inequality,
        }


@dataclass(frozen=True)
class HandleStatus:
    component: int
    framing: int
    tb: int
    status: str
    stabilizations: int  # needed when status is SteinAfterStabilizations
    deficit: int  # positive when status is NotCertified
    sites: tuple  # concrete Stabilize instances realizing the framing

    def to_dict(self):
        return {
            "component": self.component,
            "framing": self.framing,
            "tb": self.tb,
            "status": self.status,
            "stabilizations": self.stabilizations,
            "deficit": self.deficit,
            "sites": [str(m) for m in self.sites],
        }


@dataclass(frozen=True)
class SteinReport:
    handles: tuple
    certified: bool

    def to_dict(self):
        return {
            "handles": [h.to_dict() for h in self.handles],
            "certified": self.certified,
        }


def genus_bound(of: OrientedFront, k: int, framing: int) -> GenusBound:
    """Lower bound on the genus of an f-framed surface bounded by component k."""
    tb = tb_of(of, k)
    rot = rot_of(of, k)
    bound = max(0, -((tb - framing + abs(rot) + 1) // -2))  # ceil division
    verdict = (
        NOT_SLICE if framing == 0 and tb + abs(rot) >= 0 else INCONCLUSIVE
    )
    return GenusBound(k, framing, tb, rot, bound, verdict)


def slice_check(of: OrientedFront) -> SliceCertificate:
    """One-sided slice obstruction: tb + |rot| >= 0 certifies non-slice."""
    if of.component_count != 1:
        raise NotAKnot(of.component_count)
    tb = tb_of(of, 0)
    rot = rot_of(of, 0)
    lhs = tb + abs(rot)
    if lhs >= 0:
        ineq = f"tb + |rot| = {tb} + {abs(rot)} = {lhs} >= 0: no slice disk"
        return SliceCertificate(NOT_SLICE, tb, rot, ineq)
    ineq = f"tb + |rot| = {tb} + {abs(rot)} = {lhs} < 0: no obstruction"
    return SliceCertificate(INCONCLUSIVE, tb, rot, ineq)


def _stab_sites_on(diagram: FrontDiagram, component: int, count: int):
    """Pick `count` stabilization sites on one component, applied in order.

    Event insertion shifts indices monotonically, so component indices are
    stable across the sequence.
    """
    sites = []
    cur = diagram
    for _ in range(count):
        oriented = orient(cur)
        chosen = None
        for m in applicable_moves(cur):
            if m.kind != STABILIZE or m.direction != APPLY:
                continue
            _name, p = m.variant.split(":")
            if oriented.component_of((m.site, int(p))) == component:
                chosen = m
                break
        if chosen is None:
            raise UnknownComponent(component, oriented.component_count)
        sites.append(chosen)
        cur = apply_move(cur, chosen, check=False)
    return tuple(sites), cur


def stein_check(of: OrientedFront, handles) -> SteinReport:
    """Classify 2-handle framings against the tb - 1 Stein condition.

    `handles` is a sequence of (component index, framing) pairs, at most one
    per component.  A framing below tb - 1 is certified after tb - 1 - f
    stabilizations; the returned sites are re-checked by running the exact
    test on the stabilized front.
    """
    seen = set()
    statuses = []
    for component, framing in handles:
        if not 0 <= component < of.component_count:
            raise UnknownComponent(component, of.component_count)
        if component in seen:
            raise DuplicateHandle(component)
        seen.add(component)
        tb = tb_of(of, component)
        gap = framing - (tb - 1)
        if gap == 0:
            statuses.append(
                HandleStatus(component, framing, tb, EXACT_STEIN, 0, 0, ())
            )
        elif gap < 0:
            sites, stabilized = _stab_sites_on(of.diagram, component, -gap)
            redo = orient(stabilized)
            if tb_of(redo, component) - 1 != framing:
                raise ConsistencyError(
                    f"stabilized front has tb {tb_of(redo, component)}, "
                    f"framing {framing} still not exact"
                )
            statuses.append(
                HandleStatus(
                    component,
                    framing,
                    tb,
                    STEIN_AFTER_STABILIZATIONS,
                    -gap,
                    0,
                    sites,
                )
            )
        else:
            statuses.append(
                HandleStatus(component, framing, tb, NOT_CERTIFIED, 0, gap, ())
            )
    certified = all(h.status != NOT_CERTIFIED for h in statuses)
    return SteinReport(tuple(statuses), certified)
