"""Exception hierarchy for the legfront package.

Every error raised on a bad *input* derives from LegfrontError; a
ConsistencyError signals an internal tracing bug and is never expected
to surface on valid data.
"""

from __future__ import annotations


class LegfrontError(Exception):
    """Base class for all domain errors."""


class EmptyWord(LegfrontError):
    """The empty event word is rejected; there is no empty front."""


class PositionOutOfRange(LegfrontError):
    """An event addresses a strand position that does not exist."""

    def __init__(self, index: int, position: int, strands: int, kind: str):
        self.index = index
        self.position = position
        self.strands = strands
        self.kind = kind
        super().__init__(
            f"event {index}: {kind} at position {position} invalid with "
            f"{strands} strands"
        )


class UnbalancedClosure(LegfrontError):
    """The word ends with a nonzero strand count; the front is not closed."""

    def __init__(self, leftover: int):
        self.leftover = leftover
        super().__init__(f"word leaves {leftover} open strands")


class UnknownComponent(LegfrontError):
    def __init__(self, component: int, count: int):
        self.component = component
        self.count = count
        super().__init__(f"component {component} out of range (have {count})")


class SameComponent(LegfrontError):
    def __init__(self, component: int):
        self.component = component
        super().__init__(
            f"linking number needs two distinct components, got {component} twice"
        )


class NotAKnot(LegfrontError):
    def __init__(self, count: int):
        self.count = count
        super().__init__(f"operation needs a one-component front, got {count}")


class InapplicableMove(LegfrontError):
    """A rewrite was requested at a site where its schema does not match."""


class MalformedCode(LegfrontError):
    """A generic diagram code violates its structural invariants."""


class TooLarge(LegfrontError):
    def __init__(self, crossings: int, limit: int):
        self.crossings = crossings
        self.limit = limit
        super().__init__(f"{crossings} crossings exceeds state-sum cap of {limit}")


class DuplicateHandle(LegfrontError):
    def __init__(self, component: int):
        self.component = component
        super().__init__(f"component {component} assigned more than one handle")


class FrontSyntaxError(LegfrontError):
    def __init__(self, line: int, col: int, message: str):
        self.line = line
        self.col = col
        super().__init__(f"line {line}, col {col}: {message}")


class ConsistencyError(LegfrontError):
    """Internal invariant violated; indicates a bug, not bad input."""
