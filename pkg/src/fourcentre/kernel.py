"""Closed-form 2D primitives: points, lines, circles and their intersections.

All values are immutable and every routine is a pure function. Comparisons go
through a :class:`Tolerance`, which mixes an absolute and a relative epsilon.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List

from .errors import CoincidentPoints, ConcentricIdentical, GeometryError, Parallel


@dataclass(frozen=True)
class Tolerance:
    abs_eps: float = 1e-9
    rel_eps: float = 1e-9

    def __post_init__(self):
        if not (self.abs_eps > 0 and self.rel_eps > 0):
            raise ValueError("tolerance epsilons must be strictly positive")

    def threshold(self, magnitude: float = 0.0) -> float:
        return max(self.abs_eps, self.rel_eps * abs(magnitude))

    def close(self, a: float, b: float, magnitude: float | None = None) -> bool:
        if magnitude is None:
            magnitude = max(abs(a), abs(b))
        return abs(a - b) <= self.threshold(magnitude)


DEFAULT_TOL = Tolerance()


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise GeometryError(f"non-finite point ({self.x}, {self.y})")

    def __add__(self, other: Point) -> Point:
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point) -> Point:
        return Point(self.x - other.x, self.y - other.y)

    def __mul__(self, k: float) -> Point:
        return Point(self.x * k, self.y * k)

    __rmul__ = __mul__

    def __neg__(self) -> Point:
        return Point(-self.x, -self.y)

    def dot(self, other: Point) -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other: Point) -> float:
        return self.x * other.y - self.y * other.x

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def unit(self) -> Point:
        n = self.norm()
        if n == 0.0:
            raise GeometryError("zero vector has no direction")
        return Point(self.x / n, self.y / n)

    def rotated90(self) -> Point:
        return Point(-self.y, self.x)

    def distance(self, other: Point) -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def as_tuple(self) -> tuple[float, float]:
        return (self.x, self.y)


ORIGIN = Point(0.0, 0.0)


def midpoint(p1: Point, p2: Point) -> Point:
    return Point((p1.x + p2.x) / 2, (p1.y + p2.y) / 2)


@dataclass(frozen=True)
class LineSpec:
    """Infinite line ``anchor + t * direction``; direction is normalised on creation."""

    anchor: Point
    direction: Point

    def __post_init__(self):
        n = self.direction.norm()
        if n == 0.0:
            raise GeometryError("line direction must be non-zero")
        if n != 1.0:
            object.__setattr__(self, "direction", Point(self.direction.x / n, self.direction.y / n))

    @classmethod
    def through(cls, p1: Point, p2: Point) -> LineSpec:
        if p1 == p2:
            raise CoincidentPoints("a line needs two distinct points")
        return cls(p1, p2 - p1)

    def at(self, t: float) -> Point:
        return self.anchor + self.direction * t

    def parameter_of(self, p: Point) -> float:
        return (p - self.anchor).dot(self.direction)

    def distance_to(self, p: Point) -> float:
        return abs(self.direction.cross(p - self.anchor))


@dataclass(frozen=True)
class CircleSpec:
    centre: Point
    radius: float

    def __post_init__(self):
        if not (math.isfinite(self.radius) and self.radius > 0):
            raise GeometryError(f"circle radius must be positive, got {self.radius}")


def _upper_first(points: List[Point], tol: Tolerance, magnitude: float) -> List[Point]:
    if len(points) < 2:
        return points
    p, q = points
    thr = tol.threshold(magnitude)
    if abs(p.y - q.y) <= thr:
        return [p, q] if p.x >= q.x else [q, p]
    return [p, q] if p.y > q.y else [q, p]


def intersect_circle_circle(c1: CircleSpec, c2: CircleSpec, tol: Tolerance = DEFAULT_TOL) -> List[Point]:
    """Intersect two circles.

    Returns zero, one (tangency) or two points, larger ``y`` first and ties on
    ``y`` broken by larger ``x``. Raises :class:`ConcentricIdentical` if the
    circles coincide.
    """
    r1, r2 = c1.radius, c2.radius
    delta = c2.centre - c1.centre
    d = delta.norm()
    scale = max(r1, r2, d)
    thr = tol.threshold(scale)
    if d <= thr:
        if abs(r1 - r2) <= thr:
            raise ConcentricIdentical("circles coincide")
        return []
    u = delta * (1.0 / d)
    along = (d * d + r1 * r1 - r2 * r2) / (2 * d)
    foot = c1.centre + u * along
    if abs(d - (r1 + r2)) <= thr or abs(d - abs(r1 - r2)) <= thr:
        return [foot]
    h2 = r1 * r1 - along * along
    if h2 <= 0:
        return []
    h = math.sqrt(h2)
    n = u.rotated90()
    return _upper_first([foot + n * h, foot - n * h], tol, scale)


def intersect_line_circle(line: LineSpec, c: CircleSpec, tol: Tolerance = DEFAULT_TOL) -> List[Point]:
    """Intersect a line with a circle, ordered by parameter along the line direction."""
    t0 = line.parameter_of(c.centre)
    foot = line.at(t0)
    dist = foot.distance(c.centre)
    thr = tol.threshold(max(c.radius, dist))
    if abs(dist - c.radius) <= thr:
        return [foot]
    if dist > c.radius:
        return []
    half = math.sqrt(c.radius * c.radius - dist * dist)
    return [line.at(t0 - half), line.at(t0 + half)]


def intersect_line_line(l1: LineSpec, l2: LineSpec, tol: Tolerance = DEFAULT_TOL) -> Point:
    denom = l1.direction.cross(l2.direction)
    if abs(denom) < tol.threshold(1.0):
        raise Parallel("lines are parallel")
    t = (l2.anchor - l1.anchor).cross(l2.direction) / denom
    return l1.at(t)


def perpendicular_through(line: LineSpec, p: Point) -> LineSpec:
    return LineSpec(p, line.direction.rotated90())


def perpendicular_bisector(p1: Point, p2: Point, tol: Tolerance = DEFAULT_TOL) -> LineSpec:
    d = p2 - p1
    if d.norm() <= tol.threshold(max(p1.norm(), p2.norm())):
        raise CoincidentPoints("bisector of coincident points is undefined")
    return LineSpec(midpoint(p1, p2), d.rotated90())


def reflect_point(p: Point, axis: LineSpec) -> Point:
    foot = axis.at(axis.parameter_of(p))
    return foot * 2.0 - p


def collinear(p1: Point, p2: Point, p3: Point, tol: Tolerance = DEFAULT_TOL) -> bool:
    """True when the triangle height over its longest side is within tolerance."""
    longest = max(p1.distance(p2), p2.distance(p3), p1.distance(p3))
    if longest == 0.0:
        return True
    twice_area = abs((p2 - p1).cross(p3 - p1))
    return twice_area <= tol.threshold(longest) * longest


def rotate_about(p: Point, centre: Point, angle: float) -> Point:
    c, s = math.cos(angle), math.sin(angle)
    v = p - centre
    return centre + Point(c * v.x - s * v.y, s * v.x + c * v.y)
