"""Classical invariants of oriented fronts: bb, cusp counts, tb, rot, lk."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConsistencyError, SameComponent, UnknownComponent
from .front import OrientedFront, crossings, cusps


@dataclass(frozen=True)
class ComponentInvariants:
    bb: int  # self-writhe (blackboard framing)
    right_cusps: int
    down_cusps: int
    up_cusps: int
    tb: int
    rot: int


@dataclass(frozen=True)
class InvariantReport:
    components: tuple  # ComponentInvariants per component
    lk: tuple  # symmetric matrix, zero diagonal

    @property
    def component_count(self) -> int:
        return len(self.components)

    def to_dict(self) -> dict:
        return {
            "components": [
                {
                    "bb": c.bb,
                    "right_cusps": c.right_cusps,
                    "down_cusps": c.down_cusps,
                    "up_cusps": c.up_cusps,
                    "tb": c.tb,
                    "rot": c.rot,
                }
                for c in self.components
            ],
            "lk": [list(row) for row in self.lk],
        }


def _check_component(of: OrientedFront, k: int):
    if not 0 <= k < of.component_count:
        raise UnknownComponent(k, of.component_count)


def writhe(of: OrientedFront, k: int) -> int:
    """Signed count of the self-crossings of component k."""
    _check_component(of, k)
    return sum(
        sign for _e, j1, j2, sign in crossings(of) if j1 == k and j2 == k
    )


def cusp_counts(of: OrientedFront, k: int):
    """Return (right_cusps, down_cusps, up_cusps) for component k."""
    _check_component(of, k)
    right = down = up = 0
    for _e, kind, comp, sense in cusps(of):
        if comp != k:
            continue
        if kind == "R":
            right += 1
        if sense == "down":
            down += 1
        else:
            up += 1
    return right, down, up


def tb(of: OrientedFront, k: int) -> int:
    """Thurston-Bennequin number: blackboard writhe minus right cusps."""
    right, _down, _up = cusp_counts(of, k)
    return writhe(of, k) - right


def rot(of: OrientedFront, k: int) -> int:
    """Rotation number: half the downward-minus-upward cusp count."""
    _right, down, up = cusp_counts(of, k)
    if (down - up) % 2 != 0:
        raise ConsistencyError(
            f"component {k}: odd cusp-sense difference {down}-{up}"
        )
    return (down - up) // 2


def linking(of: OrientedFront, j: int, k: int) -> int:
    """Linking number of components j and k: half their signed crossings."""
    _check_component(of, j)
    _check_component(of, k)
    if j == k:
        raise SameComponent(j)
    total = sum(
        sign
        for _e, a, b, sign in crossings(of)
        if {a, b} == {j, k}
    )
    if total % 2 != 0:
        raise ConsistencyError(
            f"components {j},{k}: odd inter-crossing sum {total}"
        )
    return total // 2


def report(of: OrientedFront) -> InvariantReport:
    """Full per-component invariants plus the pairwise linking matrix."""
    n = of.component_count
    comps = []
    for k in range(n):
        right, down, up = cusp_counts(of, k)
        bb = writhe(of, k)
        comps.append(
            ComponentInvariants(
                bb=bb,
                right_cusps=right,
                down_cusps=down,
                up_cusps=up,
                tb=bb - right,
                rot=(down - up) // 2 if (down - up) % 2 == 0 else _odd(k, down, up),
            )
        )
    lk = [[0] * n for _ in range(n)]
    for j in range(n):
        for k in range(j + 1, n):
            v = linking(of, j, k)
            lk[j][k] = v
            lk[k][j] = v
    return InvariantReport(tuple(comps), tuple(tuple(row) for row in lk))


def _odd(k, down, up):
    raise ConsistencyError(f"component {k}: odd cusp-sense difference {down}-{up}")
