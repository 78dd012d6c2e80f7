"""The 4-centre oval data model, its invariant checker and measurements.

An oval is stored in canonical order so that serialised output is stable:

* ``centres``: small-arc centre on the positive major half-axis, large-arc
  centre on the positive minor half-axis, then the two opposite ones.
* ``junctions``: one per quadrant, quadrant I first, counterclockwise.
* ``arcs``: the small arc around the positive major vertex first, then
  counterclockwise.

Validation does not rely on the canonical pose; it recovers the symmetry
centre and axes from the centres themselves.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from .errors import InvalidOval
from .kernel import (
    DEFAULT_TOL,
    CircleSpec,
    LineSpec,
    Point,
    Tolerance,
    intersect_line_circle,
    midpoint,
    reflect_point,
)
from .serialize import num, point_from_json, point_to_json

TWO_PI = 2 * math.pi


class AxisDirection(str, Enum):
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"

    @property
    def major_unit(self) -> Point:
        return Point(1.0, 0.0) if self is AxisDirection.HORIZONTAL else Point(0.0, 1.0)

    @property
    def minor_unit(self) -> Point:
        return Point(0.0, 1.0) if self is AxisDirection.HORIZONTAL else Point(1.0, 0.0)


@dataclass(frozen=True)
class ArcSpec:
    """Circular arc swept counterclockwise from ``start_angle`` to ``end_angle``."""

    centre: Point
    radius: float
    start_angle: float
    end_angle: float

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError("arc radius must be positive")
        if not 0 < self.sweep < TWO_PI:
            raise ValueError(f"arc sweep must lie in (0, 2pi), got {self.sweep}")

    @classmethod
    def between(cls, centre: Point, radius: float, start: Point, end: Point) -> ArcSpec:
        a0 = math.atan2(start.y - centre.y, start.x - centre.x)
        a1 = math.atan2(end.y - centre.y, end.x - centre.x)
        sweep = (a1 - a0) % TWO_PI
        return cls(centre, radius, a0, a0 + sweep)

    @property
    def sweep(self) -> float:
        return self.end_angle - self.start_angle

    def point_at(self, angle: float) -> Point:
        return self.centre + Point(math.cos(angle), math.sin(angle)) * self.radius

    @property
    def start_point(self) -> Point:
        return self.point_at(self.start_angle)

    @property
    def end_point(self) -> Point:
        return self.point_at(self.end_angle)

    def contains_angle(self, angle: float, slack: float = 0.0) -> bool:
        offset = (angle - self.start_angle) % TWO_PI
        return offset <= self.sweep + slack or offset >= TWO_PI - slack

    def to_dict(self) -> dict:
        return {
            "centre": point_to_json(self.centre),
            "radius": num(self.radius),
            "start_angle": num(self.start_angle),
            "end_angle": num(self.end_angle),
        }

    @classmethod
    def from_dict(cls, data: dict) -> ArcSpec:
        return cls(
            point_from_json(data["centre"]),
            float(data["radius"]),
            float(data["start_angle"]),
            float(data["end_angle"]),
        )


def _quadrant_angle(p: Point, centre: Point) -> float:
    return math.atan2(p.y - centre.y, p.x - centre.x) % TWO_PI


@dataclass(frozen=True)
class FourCentreOval:
    semiaxis_minor: float
    semiaxis_major: float
    r_small: float
    r_large: float
    centres: tuple[Point, Point, Point, Point]
    junctions: tuple[Point, Point, Point, Point]
    arcs: tuple[ArcSpec, ArcSpec, ArcSpec, ArcSpec]
    major_axis_direction: AxisDirection = AxisDirection.HORIZONTAL

    @classmethod
    def from_geometry(
        cls,
        small_centres: Sequence[Point],
        large_centres: Sequence[Point],
        junctions: Sequence[Point],
        r_small: float,
        r_large: float,
        semiaxis_minor: float,
        semiaxis_major: float,
        direction: AxisDirection | str,
    ) -> FourCentreOval:
        """Assemble an oval in canonical order from constructed points.

        The symmetry centre is taken as the mean of the four centres; each arc
        runs between two consecutive junctions around it.
        """
        direction = AxisDirection(direction)
        if len(small_centres) != 2 or len(large_centres) != 2 or len(junctions) != 4:
            raise ValueError("need two small centres, two large centres and four junctions")
        g = Point(
            sum(p.x for p in (*small_centres, *large_centres)) / 4,
            sum(p.y for p in (*small_centres, *large_centres)) / 4,
        )
        m, n = direction.major_unit, direction.minor_unit
        s_pos, s_neg = sorted(small_centres, key=lambda p: (p - g).dot(m), reverse=True)
        l_pos, l_neg = sorted(large_centres, key=lambda p: (p - g).dot(n), reverse=True)
        js = sorted(junctions, key=lambda p: _quadrant_angle(p, g))

        arcs = []
        for k in range(4):
            start, end = js[k], js[(k + 1) % 4]
            vertex_dir = (midpoint(start, end) - g).unit()
            if abs(vertex_dir.dot(m)) >= abs(vertex_dir.dot(n)):
                centre = s_pos if vertex_dir.dot(m) > 0 else s_neg
                radius = r_small
                on_positive_major = vertex_dir.dot(m) > 0
            else:
                # a large arc is centred on the far side of the symmetry centre
                centre = l_neg if vertex_dir.dot(n) > 0 else l_pos
                radius = r_large
                on_positive_major = False
            arcs.append((on_positive_major, ArcSpec.between(centre, radius, start, end)))
        first = next(i for i, (flag, _) in enumerate(arcs) if flag)
        ordered = [arcs[(first + i) % 4][1] for i in range(4)]
        return cls(
            semiaxis_minor=semiaxis_minor,
            semiaxis_major=semiaxis_major,
            r_small=r_small,
            r_large=r_large,
            centres=(s_pos, l_pos, s_neg, l_neg),
            junctions=tuple(js),
            arcs=tuple(ordered),
            major_axis_direction=direction,
        )

    @property
    def small_centres(self) -> tuple[Point, Point]:
        return (self.centres[0], self.centres[2])

    @property
    def large_centres(self) -> tuple[Point, Point]:
        return (self.centres[1], self.centres[3])

    @property
    def symmetry_centre(self) -> Point:
        return Point(sum(p.x for p in self.centres) / 4, sum(p.y for p in self.centres) / 4)

    def transformed(self, fn, direction: AxisDirection | None = None) -> FourCentreOval:
        """Apply a rigid motion ``fn`` to every point and re-assemble canonically."""
        return FourCentreOval.from_geometry(
            [fn(p) for p in self.small_centres],
            [fn(p) for p in self.large_centres],
            [fn(p) for p in self.junctions],
            self.r_small,
            self.r_large,
            self.semiaxis_minor,
            self.semiaxis_major,
            direction or self.major_axis_direction,
        )

    def quarter_turn(self) -> FourCentreOval:
        """Rotate by +90 degrees about the origin, swapping the pose."""
        other = (
            AxisDirection.VERTICAL
            if self.major_axis_direction is AxisDirection.HORIZONTAL
            else AxisDirection.HORIZONTAL
        )
        return self.transformed(lambda p: Point(-p.y, p.x), other)

    def to_dict(self) -> dict:
        return {
            "semiaxis_minor": num(self.semiaxis_minor),
            "semiaxis_major": num(self.semiaxis_major),
            "r_small": num(self.r_small),
            "r_large": num(self.r_large),
            "centres": [point_to_json(p) for p in self.centres],
            "junctions": [point_to_json(p) for p in self.junctions],
            "arcs": [a.to_dict() for a in self.arcs],
            "major_axis_direction": self.major_axis_direction.value,
        }

    @classmethod
    def from_dict(cls, data: dict) -> FourCentreOval:
        centres = tuple(point_from_json(p) for p in data["centres"])
        junctions = tuple(point_from_json(p) for p in data["junctions"])
        arcs = tuple(ArcSpec.from_dict(a) for a in data["arcs"])
        if len(centres) != 4 or len(junctions) != 4 or len(arcs) != 4:
            raise ValueError("an oval has exactly four centres, junctions and arcs")
        return cls(
            semiaxis_minor=float(data["semiaxis_minor"]),
            semiaxis_major=float(data["semiaxis_major"]),
            r_small=float(data["r_small"]),
            r_large=float(data["r_large"]),
            centres=centres,
            junctions=junctions,
            arcs=arcs,
            major_axis_direction=AxisDirection(data["major_axis_direction"]),
        )


@dataclass(frozen=True)
class Violation:
    name: str
    residual: float


@dataclass(frozen=True)
class OvalReport:
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def valid(self) -> bool:
        return not self.violations

    @property
    def names(self) -> list[str]:
        return [v.name for v in self.violations]

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "violations": [{"name": v.name, "residual": num(v.residual)} for v in self.violations],
        }


def _adjoining_centres(oval: FourCentreOval, j: Point) -> tuple[Point, Point]:
    # the small centre is the near one, the large centre sits across the figure
    small = min(oval.small_centres, key=lambda c: c.distance(j))
    large = max(oval.large_centres, key=lambda c: c.distance(j))
    return small, large


def _set_mismatch(points: Sequence[Point], images: Sequence[Point]) -> float:
    return max(min(q.distance(p) for p in points) for q in images)


def oval_residuals(oval: FourCentreOval) -> dict[str, float]:
    """Measure every invariant; a residual above the tolerance is a violation."""
    res: dict[str, float] = {}
    mn, mj, rs, rl = oval.semiaxis_minor, oval.semiaxis_major, oval.r_small, oval.r_large

    res["positive_dimensions"] = max(0.0, -min(mn, mj, rs, rl))
    res["semiaxis_order"] = max(0.0, mn - mj)
    res["radius_order"] = max(0.0, rs - rl)
    res["radius_bounds"] = max(0.0, rs - mj, mn - rl)

    c = oval.centres
    sides = [c[i].distance(c[(i + 1) % 4]) for i in range(4)]
    res["rhombus"] = max(sides) - min(sides)

    collin = 0.0
    radial = 0.0
    for j in oval.junctions:
        small, large = _adjoining_centres(oval, j)
        if small == large:
            collin = math.inf
            continue
        collin = max(collin, LineSpec.through(large, small).distance_to(j))
        radial = max(radial, abs(j.distance(small) - rs), abs(j.distance(large) - rl))
    res["collinearity"] = collin
    res["junction_radius"] = radial

    g = oval.symmetry_centre
    s0, s2 = oval.small_centres
    if s0.distance(s2) == 0.0:
        res["symmetry"] = math.inf
        res["semiaxes"] = math.inf
    else:
        major_axis = LineSpec.through(s2, s0)
        minor_axis = LineSpec(g, major_axis.direction.rotated90())
        sym = 0.0
        for axis in (major_axis, minor_axis):
            sym = max(
                sym,
                _set_mismatch(oval.centres, [reflect_point(p, axis) for p in oval.centres]),
                _set_mismatch(oval.junctions, [reflect_point(p, axis) for p in oval.junctions]),
            )
        res["symmetry"] = sym
        measured_major = max(s.distance(g) for s in oval.small_centres) + rs
        measured_minor = rl - max(lc.distance(g) for lc in oval.large_centres)
        res["semiaxes"] = max(abs(measured_major - mj), abs(measured_minor - mn))
        along = abs(major_axis.direction.dot(oval.major_axis_direction.major_unit))
        res["orientation"] = 1.0 - along if along < math.sqrt(0.5) else 0.0

    arcs = oval.arcs
    expected_radii = (rs, rl, rs, rl)
    res["arc_radius"] = max(abs(a.radius - r) for a, r in zip(arcs, expected_radii))
    res["arc_centre"] = max(
        min(a.centre.distance(p) for p in (oval.small_centres if i % 2 == 0 else oval.large_centres))
        for i, a in enumerate(arcs)
    )
    res["arc_sweep"] = max(max(0.0, -a.sweep, a.sweep - TWO_PI) for a in arcs)
    res["closure"] = max(arcs[i].end_point.distance(arcs[(i + 1) % 4].start_point) for i in range(4))
    res["arc_junctions"] = _set_mismatch(oval.junctions, [a.start_point for a in arcs])
    return res


def _scale(oval: FourCentreOval) -> float:
    coords = [abs(v) for p in (*oval.centres, *oval.junctions) for v in p.as_tuple()]
    return max([abs(oval.semiaxis_major), abs(oval.r_large), *coords])


# strict inequalities are violated on equality, so they get no slack
_STRICT = {"positive_dimensions", "semiaxis_order", "radius_order", "radius_bounds", "arc_sweep"}


def validate_oval(oval: FourCentreOval, tol: Tolerance = DEFAULT_TOL) -> OvalReport:
    thr = tol.threshold(_scale(oval))
    violations = []
    for name, value in oval_residuals(oval).items():
        if name in _STRICT:
            bad = value > 0 or _strict_equality(oval, name)
        elif name == "orientation":
            bad = value > 0
        else:
            bad = not value <= thr
        if bad:
            violations.append(Violation(name, value))
    return OvalReport(tuple(violations))


def _strict_equality(oval: FourCentreOval, name: str) -> bool:
    mn, mj, rs, rl = oval.semiaxis_minor, oval.semiaxis_major, oval.r_small, oval.r_large
    if name == "positive_dimensions":
        return min(mn, mj, rs, rl) == 0
    if name == "semiaxis_order":
        return mn == mj
    if name == "radius_order":
        return rs == rl
    if name == "radius_bounds":
        return rs == mj or rl == mn
    return False


def _require_valid(oval: FourCentreOval, tol: Tolerance) -> None:
    report = validate_oval(oval, tol)
    if not report.valid:
        raise InvalidOval("oval fails validation: " + ", ".join(report.names))


def measure_semiaxes(oval: FourCentreOval, tol: Tolerance = DEFAULT_TOL) -> tuple[float, float]:
    """Return ``(minor, major)`` measured from the centres and radii."""
    _require_valid(oval, tol)
    g = oval.symmetry_centre
    major = max(s.distance(g) for s in oval.small_centres) + oval.r_small
    minor = oval.r_large - max(lc.distance(g) for lc in oval.large_centres)
    return minor, major


def boundary_point(oval: FourCentreOval, direction: Point) -> Point:
    """Where the ray from the symmetry centre along ``direction`` leaves the oval."""
    g = oval.symmetry_centre
    ray = LineSpec(g, direction)
    best = None
    best_t = -math.inf
    for arc in oval.arcs:
        for p in intersect_line_circle(ray, CircleSpec(arc.centre, arc.radius)):
            t = ray.parameter_of(p)
            if t <= 0:
                continue
            angle = math.atan2(p.y - arc.centre.y, p.x - arc.centre.x)
            if arc.contains_angle(angle, slack=1e-12) and t > best_t:
                best, best_t = p, t
    if best is None:
        raise InvalidOval("ray does not meet the oval boundary")
    return best


def ellipse_deviation(oval: FourCentreOval, samples: int = 360, tol: Tolerance = DEFAULT_TOL) -> float:
    """Largest ``|x^2/a^2 + y^2/b^2 - 1|`` over uniformly spaced boundary directions.

    ``a`` and ``b`` are the measured semiaxes and ``(x, y)`` are taken in the
    oval's own axis frame. With ``samples`` divisible by 4 the four vertices
    are among the sample points.
    """
    if samples < 8:
        raise ValueError("need at least 8 samples")
    minor, major = measure_semiaxes(oval, tol)
    g = oval.symmetry_centre
    u = (oval.small_centres[0] - g).unit()
    v = u.rotated90()
    worst = 0.0
    for k in range(samples):
        theta = TWO_PI * k / samples
        p = boundary_point(oval, u * math.cos(theta) + v * math.sin(theta)) - g
        x, y = p.dot(u), p.dot(v)
        worst = max(worst, abs(x * x / (major * major) + y * y / (minor * minor) - 1.0))
    return worst
