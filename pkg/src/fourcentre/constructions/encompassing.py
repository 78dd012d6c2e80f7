"""Circles that enclose two given circles and touch each of them internally.

The first given circle plays the role of the smaller circle around ``o``, the
second the larger one around ``a``. Arguments passed the other way round are
swapped and the swap is noted in the trace. Tangency points are always
returned in the caller's order.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from ..errors import BadParameter, GeometryError, InvalidResult, NotAdjacent, NotOverlapping, NotSeparate, TooFarApart
from ..kernel import (
    DEFAULT_TOL,
    CircleSpec,
    LineSpec,
    Point,
    Tolerance,
    collinear,
    intersect_circle_circle,
    intersect_line_circle,
    midpoint,
)
from ..serialize import circle_to_json, point_to_json
from .trace import ConstructionTrace


class CaseTag(str, Enum):
    ADJACENT = "adjacent"
    OVERLAPPING = "overlapping"
    SEPARATE_SINGLE = "separate_single"
    SEPARATE_FAMILY = "separate_family"


@dataclass(frozen=True)
class EncompassingResult:
    circle: CircleSpec
    case_tag: CaseTag
    tangency_points: tuple[Point, Point]
    trace: ConstructionTrace

    def to_dict(self, include_trace: bool = False) -> dict:
        out = {
            "circle": circle_to_json(self.circle),
            "case_tag": self.case_tag.value,
            "tangency_points": [point_to_json(p) for p in self.tangency_points],
        }
        if include_trace:
            out["trace"] = self.trace.to_dict()
        return out


@dataclass
class _Setup:
    trace: ConstructionTrace
    small: CircleSpec
    large: CircleSpec
    swapped: bool

    @property
    def o(self) -> Point:
        return self.small.centre

    @property
    def a(self) -> Point:
        return self.large.centre

    @property
    def axis_unit(self) -> Point:
        return (self.a - self.o).unit()


def _setup(c1: CircleSpec, c2: CircleSpec) -> _Setup:
    swapped = c1.radius > c2.radius
    small, large = (c2, c1) if swapped else (c1, c2)
    tr = ConstructionTrace()
    note = "arguments swapped so the smaller circle comes first" if swapped else ""
    tr.point("o", small.centre, ("centre of the smaller circle; " + note).strip("; "))
    tr.point("a", large.centre, "centre of the larger circle")
    tr.circle("fq", small, "given smaller circle")
    tr.circle("db", large, "given larger circle")
    return _Setup(tr, small, large, swapped)


def _scale(s: _Setup) -> float:
    return max(s.small.radius, s.large.radius, s.o.distance(s.a))


def _contact_beyond(centre_from: Point, circle: CircleSpec, tol: Tolerance) -> Point:
    # where the ray from the new centre through a given centre leaves that circle
    ray = LineSpec.through(centre_from, circle.centre)
    return max(intersect_line_circle(ray, circle, tol), key=ray.parameter_of)


def _finish(s: _Setup, centre: Point, radius: float, case: CaseTag, tol: Tolerance) -> EncompassingResult:
    tr = s.trace
    f = tr.point("f", _contact_beyond(centre, s.small, tol), "contact with the smaller circle")
    d = tr.point("d", _contact_beyond(centre, s.large, tol), "contact with the larger circle")
    circle = tr.circle("result", CircleSpec(centre, radius), "encompassing circle")
    points = (d, f) if s.swapped else (f, d)
    return EncompassingResult(circle, case, points, tr)


def _first(points: list[Point], what: str) -> Point:
    if not points:
        raise GeometryError(f"auxiliary circles {what} do not meet")
    return points[0]


def _through_large_circle(s: _Setup, i: Point, case: CaseTag, tol: Tolerance) -> EncompassingResult:
    tr, u = s.trace, s.axis_unit
    qo, ab = s.small.radius, s.large.radius
    tr.point("q", s.o - u * qo)
    b = tr.point("b", s.a + u * ab)
    tr.point("i", i)
    e = tr.point("e", i + u * qo, "ie = qo")
    eb = e.distance(b)
    aux = tr.circle("ou", CircleSpec(s.o, eb), "circle around o with radius eb")
    centre = tr.point("u", _first(intersect_circle_circle(aux, s.large, tol), "ou and db"), "upper branch")
    return _finish(s, centre, qo + eb, case, tol)


def encircle_adjacent(c1: CircleSpec, c2: CircleSpec, tol: Tolerance = DEFAULT_TOL) -> EncompassingResult:
    """Enclosing circle for two externally touching circles; its radius is ``qo + eb``."""
    s = _setup(c1, c2)
    gap = s.o.distance(s.a) - (s.small.radius + s.large.radius)
    if abs(gap) > tol.threshold(_scale(s)):
        raise NotAdjacent(f"circles do not touch externally (gap {gap:.12g})")
    i = s.o + s.axis_unit * s.small.radius
    return _through_large_circle(s, i, CaseTag.ADJACENT, tol)


def encircle_overlapping(c1: CircleSpec, c2: CircleSpec, tol: Tolerance = DEFAULT_TOL) -> EncompassingResult:
    s = _setup(c1, c2)
    if len(intersect_circle_circle(s.small, s.large, tol)) != 2:
        raise NotOverlapping("circles do not cross in two points")
    # i is where the larger circle meets the centre line on o's side
    i = s.a - s.axis_unit * s.large.radius
    return _through_large_circle(s, i, CaseTag.OVERLAPPING, tol)


def _require_separate(s: _Setup, tol: Tolerance) -> None:
    gap = s.o.distance(s.a) - (s.small.radius + s.large.radius)
    if gap <= tol.threshold(_scale(s)):
        raise NotSeparate(f"circles touch or overlap (gap {gap:.12g})")


def encircle_separate_single(c1: CircleSpec, c2: CircleSpec, tol: Tolerance = DEFAULT_TOL) -> EncompassingResult:
    """Enclosing circle of radius ``oq + 2 ab`` for two disjoint circles.

    Exists only while the auxiliary circles around ``o`` (radius ``2 ab``) and
    ``a`` (radius ``oq + ab``) meet, i.e. ``3 ab + oq >= oa``. The weaker-looking
    bound ``2 (ab + oq) >= oa`` is reported alongside but not used.
    """
    s = _setup(c1, c2)
    _require_separate(s, tol)
    tr, u = s.trace, s.axis_unit
    oq, ab = s.small.radius, s.large.radius
    oa = s.o.distance(s.a)
    tr.point("q", s.o - u * oq)
    tr.point("j", s.o + u * oq)
    i = tr.point("i", s.a - u * ab)
    b = tr.point("b", s.a + u * ab)
    bi = b.distance(i)
    hx = tr.circle("hx", CircleSpec(s.o, bi), "circle around o with radius bi")
    xn = tr.circle("xn", CircleSpec(s.a, oq + ab), "circle around a with radius oq + ab")
    hits = intersect_circle_circle(hx, xn, tol)
    if not hits:
        raise TooFarApart(
            f"auxiliary circles do not meet: 3ab + oq = {3 * ab + oq:.12g} < oa = {oa:.12g}; "
            f"stated bound 2(ab + oq) = {2 * (ab + oq):.12g}"
        )
    centre = tr.point("x", hits[0], f"upper branch; 2(ab + oq) = {2 * (ab + oq):.12g}, oa = {oa:.12g}")
    return _finish(s, centre, oq + bi, CaseTag.SEPARATE_SINGLE, tol)


def _family_core(s: _Setup, d: float, tol: Tolerance) -> EncompassingResult:
    tr, u = s.trace, s.axis_unit
    q = tr.point("q", s.o - u * s.small.radius)
    b = tr.point("b", s.a + u * s.large.radius)
    z = tr.point("z", midpoint(q, b), "midpoint of qb")
    p = tr.point("p", z + u * d, "zp = d towards a")
    k = tr.point("k", z - u * d, "zk = d towards o")
    px = tr.circle("px", CircleSpec(s.o, s.o.distance(p)), "circle around o with radius op")
    kx = tr.circle("kx", CircleSpec(s.a, s.a.distance(k)), "circle around a with radius ak")
    centre = tr.point("x", _first(intersect_circle_circle(px, kx, tol), "px and kx"), "upper branch")
    return _finish(s, centre, s.small.radius + px.radius, CaseTag.SEPARATE_FAMILY, tol)


def encircle_separate_family(
    c1: CircleSpec, c2: CircleSpec, d: float, tol: Tolerance = DEFAULT_TOL
) -> EncompassingResult:
    """Member ``d >= 0`` of the family of enclosing circles of two disjoint circles.

    The radius is ``|qb| / 2 + d``, so it grows affinely with ``d``.
    """
    if not d >= 0:
        raise BadParameter(f"family parameter must be non-negative, got {d}")
    s = _setup(c1, c2)
    _require_separate(s, tol)
    return _family_core(s, d, tol)


def encompassing_residuals(result: EncompassingResult, given: tuple[CircleSpec, CircleSpec]) -> dict[str, float]:
    x, big_r = result.circle.centre, result.circle.radius
    res = {"internal_tangency": 0.0, "contact_on_given": 0.0, "contact_on_result": 0.0}
    for c, t in zip(given, result.tangency_points):
        res["internal_tangency"] = max(res["internal_tangency"], abs(x.distance(c.centre) + c.radius - big_r))
        res["contact_on_given"] = max(res["contact_on_given"], abs(t.distance(c.centre) - c.radius))
        res["contact_on_result"] = max(res["contact_on_result"], abs(t.distance(x) - big_r))
    return res


def validate_encompassing(
    result: EncompassingResult, given: tuple[CircleSpec, CircleSpec], tol: Tolerance = DEFAULT_TOL
) -> list[str]:
    """Names of failed tangency checks; an empty list means the result is sound."""
    thr = tol.threshold(result.circle.radius)
    failed = [name for name, value in encompassing_residuals(result, given).items() if not value <= thr]
    for c, t in zip(given, result.tangency_points):
        if not collinear(t, result.circle.centre, c.centre, tol):
            failed.append("collinearity")
            break
    return failed


def require_valid_encompassing(
    result: EncompassingResult, given: tuple[CircleSpec, CircleSpec], tol: Tolerance = DEFAULT_TOL
) -> None:
    failed = validate_encompassing(result, given, tol)
    if failed:
        raise InvalidResult("encompassing circle fails: " + ", ".join(failed))
