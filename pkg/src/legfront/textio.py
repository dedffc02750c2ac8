"""Text formats and JSON report envelopes.

Front files: whitespace-separated tokens ``L<i>``, ``R<i>``, ``X<i>``;
``#`` starts a comment running to end of line; one diagram per file.

Grid files::

    grid <n>
    X: i1 ... in
    O: j1 ... jn

JSON reports share the envelope ``{"schema": "legfront-report/1",
"kind": ..., ...}``; the machine-readable schema lives in
docs/report.schema.json.
"""

from __future__ import annotations

import json
import re

from .errors import FrontSyntaxError
from .front import (
    FrontDiagram,
    FrontEvent,
    GridDiagram,
    OrientedFront,
    validate,
)
from .invariants import InvariantReport

SCHEMA = "legfront-report/1"

_TOKEN = re.compile(r"([LRX])([0-9]+)$")


def _strip_comments(text: str):
    for ln, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0]
        yield ln, body


def parse_front(text: str) -> FrontDiagram:
    """Parse a front word; syntax errors carry line and column numbers."""
    events = []
    for ln, body in _strip_comments(text):
        col = 0
        for tok in body.split():
            col = body.index(tok, col) + 1
            m = _TOKEN.match(tok)
            if not m:
                raise FrontSyntaxError(ln, col, f"bad token {tok!r}")
            kind, pos = m.groups()
            events.append(FrontEvent(kind, int(pos)))
            col += len(tok) - 1
    if not events:
        raise FrontSyntaxError(1, 1, "no events found")
    return validate(events)


def serialize_front(d: FrontDiagram) -> str:
    return " ".join(str(e) for e in d.events) + "\n"


def parse_grid(text: str) -> GridDiagram:
    lines = []
    for ln, body in _strip_comments(text):
        if body.strip():
            lines.append((ln, body.strip()))
    if len(lines) != 3:
        raise FrontSyntaxError(
            lines[-1][0] if lines else 1, 1, "grid files have three lines"
        )
    (l1, h), (l2, xline), (l3, oline) = lines
    m = re.match(r"grid\s+(\d+)$", h)
    if not m:
        raise FrontSyntaxError(l1, 1, "expected 'grid <n>'")
    n = int(m.group(1))
    xs = _marker_row(l2, xline, "X", n)
    os = _marker_row(l3, oline, "O", n)
    try:
        return GridDiagram(xs, os)
    except ValueError as exc:
        raise FrontSyntaxError(l2, 1, str(exc)) from exc


def _marker_row(ln, line, name, n):
    m = re.match(rf"{name}:\s*(.*)$", line)
    if not m:
        raise FrontSyntaxError(ln, 1, f"expected '{name}: ...'")
    try:
        vals = tuple(int(tok) for tok in m.group(1).split())
    except ValueError as exc:
        raise FrontSyntaxError(ln, 1, f"non-integer entry: {exc}") from exc
    if len(vals) != n:
        raise FrontSyntaxError(ln, 1, f"expected {n} entries, got {len(vals)}")
    return vals


def serialize_grid(g: GridDiagram) -> str:
    return (
        f"grid {g.size}\n"
        "X: " + " ".join(map(str, g.xs)) + "\n"
        "O: " + " ".join(map(str, g.os)) + "\n"
    )


def report_envelope(kind: str, data: dict) -> dict:
    return {"schema": SCHEMA, "kind": kind, **data}


def invariants_json(of: OrientedFront, rep: InvariantReport, word: str) -> str:
    return dump_json(
        report_envelope(
            "invariants",
            {"word": word.strip(), "components": rep.to_dict()["components"], "lk": rep.to_dict()["lk"]},
        )
    )


def dump_json(obj) -> str:
    """Canonical JSON used everywhere: sorted keys, fixed separators."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"
