"""Deterministic SVG output for ovals, enclosing circles and construction traces.

Documents are a pure function of their inputs. Coordinates are written in
fixed-point notation with ``style.decimals`` places. The y axis is flipped on
output so figures keep the mathematical orientation. Elements always come in
the same order: given geometry, auxiliaries, the main curve, then labels.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable
from xml.sax.saxutils import escape

from .constructions.encompassing import EncompassingResult, require_valid_encompassing
from .constructions.trace import ConstructionTrace, StepKind
from .errors import InvalidOval
from .kernel import DEFAULT_TOL, CircleSpec, LineSpec, Point, Tolerance
from .model import ArcSpec, FourCentreOval, validate_oval


@dataclass(frozen=True)
class RenderStyle:
    """Stroke widths are percentages of the larger viewport side."""

    stroke_width_main: float = 0.6
    stroke_width_aux: float = 0.25
    show_labels: bool = True
    show_aux: bool = True
    decimals: int = 6

    def __post_init__(self):
        if not (self.stroke_width_main > 0 and self.stroke_width_aux > 0):
            raise ValueError("stroke widths must be positive")
        if not 3 <= self.decimals <= 12:
            raise ValueError("decimals must lie in [3, 12]")


@dataclass(frozen=True)
class Viewport:
    min_x: float
    max_x: float
    min_y: float
    max_y: float
    margin_fraction: float = 0.05

    def __post_init__(self):
        if not (self.max_x > self.min_x and self.max_y > self.min_y):
            raise ValueError("viewport must have positive extent on both axes")
        if not 0 <= self.margin_fraction <= 0.5:
            raise ValueError("margin_fraction must lie in [0, 0.5]")

    @classmethod
    def around(cls, points: Iterable[Point], margin_fraction: float = 0.05) -> Viewport:
        pts = list(points)
        xs = [p.x for p in pts]
        ys = [p.y for p in pts]
        min_x, max_x, min_y, max_y = min(xs), max(xs), min(ys), max(ys)
        # guard against a flat box
        pad = 1e-6 * max(1.0, max_x - min_x, max_y - min_y)
        if max_x - min_x < pad:
            min_x, max_x = min_x - pad, max_x + pad
        if max_y - min_y < pad:
            min_y, max_y = min_y - pad, max_y + pad
        return cls(min_x, max_x, min_y, max_y, margin_fraction)

    @property
    def extent(self) -> float:
        return max(self.max_x - self.min_x, self.max_y - self.min_y)

    def padded(self) -> Viewport:
        m = self.margin_fraction * self.extent
        return Viewport(self.min_x - m, self.max_x + m, self.min_y - m, self.max_y + m, 0.0)


def _circle_extremes(c: CircleSpec) -> list[Point]:
    r = c.radius
    return [c.centre + Point(r, 0), c.centre + Point(-r, 0), c.centre + Point(0, r), c.centre + Point(0, -r)]


def _arc_extremes(arc: ArcSpec) -> list[Point]:
    pts = [arc.start_point, arc.end_point]
    for k in range(4):
        angle = k * math.pi / 2
        if arc.contains_angle(angle):
            pts.append(arc.point_at(angle))
    return pts


def _clip_line(line: LineSpec, box: Viewport) -> tuple[Point, Point] | None:
    lo, hi = -math.inf, math.inf
    for origin, direction, low, high in (
        (line.anchor.x, line.direction.x, box.min_x, box.max_x),
        (line.anchor.y, line.direction.y, box.min_y, box.max_y),
    ):
        if abs(direction) < 1e-15:
            if not low <= origin <= high:
                return None
            continue
        t1, t2 = (low - origin) / direction, (high - origin) / direction
        lo, hi = max(lo, min(t1, t2)), min(hi, max(t1, t2))
    if lo >= hi:
        return None
    return line.at(lo), line.at(hi)


class _Writer:
    def __init__(self, box: Viewport, style: RenderStyle):
        self.box = box
        self.style = style
        self.lines: list[str] = []

    def n(self, v: float) -> str:
        s = f"{v:.{self.style.decimals}f}"
        return "0." + "0" * self.style.decimals if float(s) == 0.0 else s

    def xy(self, p: Point) -> str:
        return f"{self.n(p.x)} {self.n(-p.y)}"

    def width(self, percent: float) -> str:
        return self.n(percent * self.box.extent / 100)

    def add(self, text: str, indent: int = 2) -> None:
        self.lines.append(" " * indent + text)

    def circle(self, cls: str, c: CircleSpec) -> None:
        self.add(f'<circle class="{cls}" cx="{self.n(c.centre.x)}" cy="{self.n(-c.centre.y)}" r="{self.n(c.radius)}"/>', 4)

    def segment(self, cls: str, p: Point, q: Point) -> None:
        self.add(
            f'<line class="{cls}" x1="{self.n(p.x)}" y1="{self.n(-p.y)}" x2="{self.n(q.x)}" y2="{self.n(-q.y)}"/>', 4
        )

    def cross(self, cls: str, p: Point, size: float) -> None:
        a, b = p - Point(size, size), p + Point(size, size)
        c, d = p + Point(-size, size), p + Point(size, -size)
        self.add(f'<path class="{cls}" d="M {self.xy(a)} L {self.xy(b)} M {self.xy(c)} L {self.xy(d)}"/>', 4)

    def arc(self, cls: str, arc: ArcSpec) -> None:
        large = 1 if arc.sweep > math.pi else 0
        r = self.n(arc.radius)
        # counterclockwise in model space is sweep-flag 0 once y is flipped
        self.add(
            f'<path class="{cls}" d="M {self.xy(arc.start_point)} A {r} {r} 0 {large} 0 {self.xy(arc.end_point)}"/>', 4
        )

    def label(self, text: str, p: Point, offset: float) -> None:
        q = p + Point(offset, offset)
        self.add(f'<text x="{self.n(q.x)}" y="{self.n(-q.y)}">{escape(text)}</text>', 4)

    def open_group(self, gid: str, stroke: str | None, width: float | None, extra: str = "") -> None:
        attrs = f'id="{gid}"'
        if stroke is not None:
            attrs += f' fill="none" stroke="{stroke}" stroke-width="{self.width(width)}"'
        self.add(f"<g {attrs}{extra}>")

    def close_group(self) -> None:
        self.add("</g>")

    def document(self) -> str:
        b = self.box
        head = [
            '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
            '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'viewBox="{self.n(b.min_x)} {self.n(-b.max_y)} {self.n(b.max_x - b.min_x)} {self.n(b.max_y - b.min_y)}">',
        ]
        return "\n".join(head + self.lines + ["</svg>", ""])


def _trace_extent_points(trace: ConstructionTrace, skip: set[CircleSpec] = frozenset()) -> list[Point]:
    pts: list[Point] = []
    for step in trace:
        if step.kind is StepKind.POINT:
            pts.append(step.geometry)
        elif step.kind is StepKind.CIRCLE and step.geometry not in skip:
            pts.extend(_circle_extremes(step.geometry))
        elif step.kind is StepKind.SEGMENT:
            pts.extend(step.geometry)
    return pts


def _write_aux(w: _Writer, trace: ConstructionTrace, skip: set[CircleSpec] = frozenset()) -> None:
    w.open_group("aux", "#777777", w.style.stroke_width_aux)
    marker = 0.008 * w.box.extent
    for step in trace:
        if step.kind is StepKind.CIRCLE and step.geometry not in skip:
            w.circle("aux", step.geometry)
        elif step.kind is StepKind.LINE:
            clipped = _clip_line(step.geometry, w.box)
            if clipped:
                w.segment("aux", *clipped)
        elif step.kind is StepKind.SEGMENT:
            w.segment("aux", *step.geometry)
        elif step.kind is StepKind.POINT:
            w.cross("point", step.geometry, marker)
    w.close_group()


def _write_labels(w: _Writer, trace: ConstructionTrace) -> None:
    size = w.n(0.03 * w.box.extent)
    w.add(f'<g id="labels" font-family="serif" font-size="{size}" fill="#000000">')
    for step in trace.of_kind(StepKind.POINT):
        w.label(step.label, step.geometry, 0.01 * w.box.extent)
    w.close_group()


def render_oval(
    oval: FourCentreOval,
    trace: ConstructionTrace | None = None,
    style: RenderStyle = RenderStyle(),
    tol: Tolerance = DEFAULT_TOL,
) -> str:
    report = validate_oval(oval, tol)
    if not report.valid:
        raise InvalidOval("cannot render an invalid oval: " + ", ".join(report.names))
    pts = [p for arc in oval.arcs for p in _arc_extremes(arc)]
    use_aux = trace is not None and style.show_aux
    if use_aux:
        pts += _trace_extent_points(trace)
    elif trace is not None and style.show_labels:
        pts += [s.geometry for s in trace.of_kind(StepKind.POINT)]
    w = _Writer(Viewport.around(pts).padded(), style)
    if use_aux:
        _write_aux(w, trace)
    w.open_group("oval", "#000000", style.stroke_width_main)
    for arc in oval.arcs:
        w.arc("oval-arc", arc)
    w.close_group()
    if trace is not None and style.show_labels:
        _write_labels(w, trace)
    return w.document()


def render_encompassing(
    result: EncompassingResult,
    given: tuple[CircleSpec, CircleSpec],
    style: RenderStyle = RenderStyle(),
    tol: Tolerance = DEFAULT_TOL,
) -> str:
    require_valid_encompassing(result, given, tol)
    drawn = {given[0], given[1], result.circle}
    pts = [p for c in drawn for p in _circle_extremes(c)]
    if style.show_aux:
        pts += _trace_extent_points(result.trace, drawn)
    w = _Writer(Viewport.around(pts).padded(), style)
    w.open_group("given", "#000000", style.stroke_width_aux)
    for c in given:
        w.circle("given", c)
    w.close_group()
    if style.show_aux:
        _write_aux(w, result.trace, drawn)
    w.open_group("encompassing", "#000000", style.stroke_width_main)
    w.circle("encompassing", result.circle)
    for p in result.tangency_points:
        w.cross("tangency", p, 0.015 * w.box.extent)
    w.close_group()
    if style.show_labels:
        _write_labels(w, result.trace)
    return w.document()
