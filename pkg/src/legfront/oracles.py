"""Brute-force cross-checks used by the test suite (and `legfront verify`).

Everything here works on exported GenericCodes and deliberately shares no
computation with the invariants module: signs are recomputed from the
end-slot geometry, and the Kauffman bracket is a full 2^n state sum.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import GenericCode, SLOTS_CCW, validate_code
from .errors import MalformedCode, TooLarge

MAX_CROSSINGS = 12


@dataclass(frozen=True)
class BracketPolynomial:
    """Sparse integer Laurent polynomial in one variable A."""

    coeffs: tuple  # sorted tuple of (exponent, coefficient), no zeros

    @staticmethod
    def from_dict(d: dict) -> "BracketPolynomial":
        return BracketPolynomial(
            tuple(sorted((e, c) for e, c in d.items() if c != 0))
        )

    @staticmethod
    def unit() -> "BracketPolynomial":
        return BracketPolynomial(((0, 1),))

    def is_unit(self) -> bool:
        return self.coeffs == ((0, 1),)

    def mirror(self) -> "BracketPolynomial":
        """Substitute A -> A^-1 (the bracket of the mirror diagram)."""
        return BracketPolynomial.from_dict({-e: c for e, c in self.coeffs})

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in self.coeffs:
            if e == 0:
                parts.append(f"{c:+d}")
            else:
                parts.append(f"{c:+d}*A^{e}")
        return " ".join(parts)


def _slot_sign(rec) -> int:
    """Recompute a crossing sign from its in/out end geometry alone.

    The over strand runs ul-lr, the under strand ll-ur; the sign is +1
    exactly when both incoming ends sit on the same side of the crossing.
    """
    over_in = "ul" if rec.flags["ul"] == "in" else "lr"
    under_in = "ll" if rec.flags["ll"] == "in" else "ur"
    return 1 if (over_in, under_in) in (("ul", "ll"), ("lr", "ur")) else -1


def oracle_writhe(code: GenericCode, component=None) -> int:
    """Signed self-crossing count recomputed from slot geometry."""
    validate_code(code)
    total = 0
    for rec in code.crossings:
        if rec.over_component != rec.under_component:
            continue
        if component is not None and rec.over_component != component:
            continue
        total += _slot_sign(rec)
    return total


def oracle_linking(code: GenericCode, j: int, k: int) -> int:
    """Half the signed inter-crossing count between components j and k."""
    validate_code(code)
    if j == k:
        raise MalformedCode("linking needs two distinct components")
    total = 0
    for rec in code.crossings:
        if {rec.over_component, rec.under_component} == {j, k}:
            total += _slot_sign(rec)
    if total % 2 != 0:
        raise MalformedCode(f"odd inter-crossing sum {total}")
    return total // 2


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


# Rotating the over strand (the ul-lr diagonal) counterclockwise sweeps
# the left and right regions, so the A-smoothing merges them by joining
# ul-ur and ll-lr; the B-smoothing is the complementary planar pairing.
_A_PAIRS = (("ul", "ur"), ("ll", "lr"))
_B_PAIRS = (("ul", "ll"), ("lr", "ur"))


def kauffman_bracket(code: GenericCode, max_crossings: int = MAX_CROSSINGS) -> BracketPolynomial:
    """Writhe-normalised bracket polynomial via the full state sum.

    The result is invariant under diagram moves of the closure, so equal
    outputs certify equal knot types for the small inputs used in tests.
    """
    validate_code(code)
    n = code.crossing_count
    if n > max_crossings:
        raise TooLarge(n, max_crossings)

    ends = [(ci, s) for ci in range(n) for s in SLOTS_CCW]
    acc: dict = {}
    for state in range(1 << n):
        uf = _UnionFind(ends)
        for a, b in code.edges:
            uf.union(a, b)
        a_count = 0
        for ci in range(n):
            use_a = (state >> ci) & 1 == 0
            if use_a:
                a_count += 1
            for s1, s2 in (_A_PAIRS if use_a else _B_PAIRS):
                uf.union((ci, s1), (ci, s2))
        loops = len({uf.find(e) for e in ends}) if ends else 0
        loops += code.free_loops
        exponent = a_count - (n - a_count)
        # multiply A^exponent by (-A^2 - A^-2)^(loops - 1)
        for e, c in _d_power(loops - 1).items():
            key = exponent + e
            acc[key] = acc.get(key, 0) + c
    # normalise by (-A^3)^(-w)
    w = sum(_slot_sign(rec) for rec in code.crossings)
    shifted = {e - 3 * w: (c if w % 2 == 0 else -c) for e, c in acc.items()}
    return BracketPolynomial.from_dict(shifted)


_D_POWERS = {0: {0: 1}}


def _d_power(k: int) -> dict:
    """Coefficients of (-A^2 - A^-2)^k as an exponent -> coeff dict."""
    if k < 0:
        raise MalformedCode("a state produced zero loops")
    if k not in _D_POWERS:
        prev = _d_power(k - 1)
        nxt: dict = {}
        for e, c in prev.items():
            nxt[e + 2] = nxt.get(e + 2, 0) - c
            nxt[e - 2] = nxt.get(e - 2, 0) - c
        _D_POWERS[k] = nxt
    return _D_POWERS[k]
