"""Deterministic ASCII and SVG pictures of oriented fronts.

One column per event.  Strand p of a slice sits on canvas row 2p-1 (ASCII)
or at y = p * strand_spacing (SVG); cusps are drawn as corner points, and
at every crossing the descending strand is drawn through while the other
strand is interrupted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .front import (
    CROSSING,
    LEFT_CUSP,
    OrientedFront,
    RIGHT_CUSP,
)


@dataclass(frozen=True)
class RenderSpec:
    format: str = "ascii"  # "ascii" | "svg"
    column_width: int = 12  # SVG pixels per event column
    strand_spacing: int = 10  # SVG pixels between strand levels
    event_labels: bool = False
    component_labels: bool = False

    def __post_init__(self):
        if self.format not in ("ascii", "svg"):
            raise ValueError(f"unknown format {self.format!r}")
        if self.column_width <= 0 or self.strand_spacing <= 0:
            raise ValueError("geometry parameters must be positive")


def render(of: OrientedFront, spec: RenderSpec = RenderSpec()) -> str:
    if spec.format == "svg":
        return _render_svg(of, spec)
    return _render_ascii(of, spec)


def _transitions(d, e):
    """(row_from, row_to) pairs for strands continuing through event e."""
    ev = d.events[e]
    i = ev.position
    pairs = []
    s = d.profile[e]
    if ev.kind == LEFT_CUSP:
        for p in range(1, s + 1):
            pairs.append((p, p if p < i else p + 2))
    elif ev.kind == RIGHT_CUSP:
        for p in range(1, s + 1):
            if p in (i, i + 1):
                continue
            pairs.append((p, p if p < i else p - 2))
    else:
        for p in range(1, s + 1):
            if p == i:
                pairs.append((p, p + 1))
            elif p == i + 1:
                pairs.append((p, p))  # placeholder, drawn by the crossing
            else:
                pairs.append((p, p))
    return pairs


class _Canvas:
    def __init__(self, rows):
        self.rows = rows
        self.cols = 0
        self.cells = {}

    def put(self, r, c, ch):
        self.cells[(r, c)] = ch
        self.cols = max(self.cols, c + 1)

    def hline(self, r, c0, c1):
        for c in range(c0, c1 + 1):
            if (r, c) not in self.cells:
                self.put(r, c, "-")

    def diagonal(self, r0, r1, c0, width):
        """A 45-degree run from (r0, c0) reaching r1, padded to width."""
        if r0 == r1:
            self.hline(r0, c0, c0 + width - 1)
            return
        step = 1 if r1 > r0 else -1
        ch = "\\" if step > 0 else "/"
        n = abs(r1 - r0)
        lead = (width - n) // 2
        self.hline(r0, c0, c0 + lead - 1)
        r, c = r0, c0 + lead
        for _ in range(n):
            self.put(r, c, ch)
            r += step
            c += 1
        self.hline(r1, c, c0 + width - 1)

    def text(self):
        out = []
        for r in range(self.rows):
            line = "".join(
                self.cells.get((r, c), " ") for c in range(self.cols)
            )
            out.append(line.rstrip())
        return "\n".join(out).rstrip("\n") + "\n"


def _render_ascii(of: OrientedFront, spec: RenderSpec) -> str:
    d = of.diagram
    smax = d.max_strands
    rows = 2 * smax + 1
    canvas = _Canvas(rows)
    header = []
    col = 1

    def row(p):
        return 2 * p - 1

    for e, ev in enumerate(d.events):
        i = ev.position
        deltas = [abs(row(a) - row(b)) for a, b in _transitions(d, e)]
        width = max([4] + [dl + 2 for dl in deltas])
        header.append((col, e))
        for (a, b) in _transitions(d, e):
            if ev.kind == CROSSING and a in (i, i + 1):
                continue
            canvas.diagonal(row(a), row(b), col, width)
        if ev.kind == LEFT_CUSP:
            c = col + max(0, width // 2 - 2)
            canvas.put(row(i) + 1, c, "<")
            canvas.put(row(i), c + 1, "/")
            canvas.hline(row(i), c + 2, col + width - 1)
            canvas.put(row(i + 1), c + 1, "\\")
            canvas.hline(row(i + 1), c + 2, col + width - 1)
        elif ev.kind == RIGHT_CUSP:
            c = col + min(width - 1, width // 2 + 1)
            canvas.hline(row(i), col, c - 2)
            canvas.put(row(i), c - 1, "\\")
            canvas.put(row(i) + 1, c, ">")
            canvas.hline(row(i + 1), col, c - 2)
            canvas.put(row(i + 1), c - 1, "/")
        else:
            # under strand first, then the descending strand on top of it
            canvas.diagonal(row(i + 1), row(i), col, width)
            canvas.diagonal(row(i), row(i + 1), col, width)
        col += width + 1
    out = canvas.text()
    if spec.event_labels:
        marks = [" "] * col
        for c, e in header:
            lab = str(e)
            for k, ch in enumerate(lab):
                if c + k < col:
                    marks[c + k] = ch
        out = "".join(marks).rstrip() + "\n" + out
    if spec.component_labels:
        names = ", ".join(
            f"{k}: starts at event {_first_left_cusp(of, k)}"
            for k in range(of.component_count)
        )
        out += f"components: {names}\n"
    return out


def _first_left_cusp(of, k):
    d = of.diagram
    for e, ev in enumerate(d.events):
        if ev.kind == LEFT_CUSP and of.component_of((e + 1, ev.position)) == k:
            return e
    return -1


def _render_svg(of: OrientedFront, spec: RenderSpec) -> str:
    d = of.diagram
    w, h = spec.column_width, spec.strand_spacing
    width = (len(d.events) + 1) * w
    height = (d.max_strands + 1) * h
    paths = []
    labels = []

    def x(e):
        return (e + 1) * w

    def y(p):
        return p * h

    for e, ev in enumerate(d.events):
        i = ev.position
        x0, x1 = x(e) - w // 2, x(e) + w // 2
        xm = x(e)
        for (a, b) in _transitions(d, e):
            if ev.kind == CROSSING and a in (i, i + 1):
                continue
            paths.append(f"M {x0} {y(a)} L {x1} {y(b)}")
        if ev.kind == LEFT_CUSP:
            yc = (y(i) + y(i + 1)) // 2
            paths.append(f"M {x1} {y(i)} L {xm} {yc} L {x1} {y(i + 1)}")
        elif ev.kind == RIGHT_CUSP:
            yc = (y(i) + y(i + 1)) // 2
            paths.append(f"M {x0} {y(i)} L {xm} {yc} L {x0} {y(i + 1)}")
        else:
            # under strand (ascending), interrupted around the centre point
            gap = max(1, h // 3)
            ym = (y(i) + y(i + 1)) / 2
            dx, dy = x1 - x0, y(i) - y(i + 1)
            t = gap / (dx * dx + dy * dy) ** 0.5
            paths.append(
                f"M {x0} {y(i + 1)} L {_fmt(xm - t * dx)} {_fmt(ym - t * dy)}"
            )
            paths.append(
                f"M {_fmt(xm + t * dx)} {_fmt(ym + t * dy)} L {x1} {y(i)}"
            )
            # descending (front) strand drawn through
            paths.append(f"M {x0} {y(i)} L {x1} {y(i + 1)}")
        if spec.event_labels:
            labels.append(
                f'<text x="{xm}" y="{height - 2}" font-size="{h // 2}" '
                f'text-anchor="middle">{e}</text>'
            )
    body = "".join(
        f'<path d="{p}" fill="none" stroke="black" stroke-width="1.5"/>'
        for p in paths
    )
    if spec.component_labels:
        for k in range(of.component_count):
            e = _first_left_cusp(of, k)
            i = d.events[e].position
            yc = (y(i) + y(i + 1)) // 2
            labels.append(
                f'<text x="{x(e) - w // 2}" y="{yc}" font-size="{h // 2}" '
                f'text-anchor="end">{k}</text>'
            )
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="0 0 {width} {height}" width="{width}" height="{height}">'
        + body
        + "".join(labels)
        + "</svg>\n"
    )


def _fmt(v: float) -> str:
    s = f"{v:.2f}"
    return s.rstrip("0").rstrip(".") if "." in s else s
