"""Ovals from two semiaxes plus one arc radius.

``construct_oval_b1`` takes the radius of the large arcs and works in a
major-horizontal pose; ``construct_oval_b2`` takes the radius of the small
arcs and works in a major-vertical pose. Point labels follow the lettering of
the classical figures so a trace can be checked against them.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from ..errors import BadAxes, BadParameter, Infeasible, RadiusTooLarge
from ..kernel import (
    DEFAULT_TOL,
    ORIGIN,
    CircleSpec,
    LineSpec,
    Point,
    Tolerance,
    intersect_line_circle,
    intersect_line_line,
    midpoint,
    perpendicular_bisector,
    perpendicular_through,
    reflect_point,
    rotate_about,
)
from ..model import AxisDirection, FourCentreOval
from .trace import ConstructionTrace


def _record_arcs(trace: ConstructionTrace, oval: FourCentreOval) -> None:
    for i, arc in enumerate(oval.arcs):
        kind = "small" if i % 2 == 0 else "large"
        trace.arc(f"arc{i}", arc, f"{kind} arc of the oval")


@dataclass(frozen=True)
class B1Feasibility:
    """Both forms of the feasibility test for the large-radius construction."""

    oa: float
    oc: float
    bound: float

    @property
    def geometric(self) -> bool:
        return self.oa > self.oc

    @property
    def closed_form(self) -> bool:
        return self.oa > self.bound

    @property
    def feasible(self) -> bool:
        return self.geometric and self.closed_form

    def message(self) -> str:
        return (
            f"requires oa > oc (oa = {self.oa:.12g}, oc = {self.oc:.12g}); "
            f"equivalently oa > (ae^2 + ce^2)/(2 ae) = {self.bound:.12g}"
        )


def _check_axes(minor: float, major: float) -> None:
    if not (minor > 0 and major > 0):
        raise BadAxes(f"semiaxes must be positive, got minor={minor}, major={major}")
    if not minor < major:
        raise BadAxes(f"minor semiaxis must be shorter than the major one, got {minor} >= {major}")


def b1_feasibility(ae: float, ce: float, oa: float) -> B1Feasibility:
    _check_axes(ae, ce)
    if not oa > 0:
        raise BadAxes(f"radius oa must be positive, got {oa}")
    oe = oa - ae
    return B1Feasibility(oa=oa, oc=math.hypot(oe, ce), bound=(ae * ae + ce * ce) / (2 * ae))


def b1_feasible(ae: float, ce: float, oa: float) -> bool:
    """Whether the large radius ``oa`` admits an oval with semiaxes ``ae < ce``.

    Computed both as the geometric test ``oa > oc`` and as the closed form
    ``oa > (ae^2 + ce^2) / (2 ae)``; both must hold.
    """
    return b1_feasibility(ae, ce, oa).feasible


def construct_oval_b1(
    ae: float, ce: float, oa: float, tol: Tolerance = DEFAULT_TOL
) -> tuple[FourCentreOval, ConstructionTrace]:
    feas = b1_feasibility(ae, ce, oa)
    if not feas.feasible:
        raise Infeasible(feas.message())

    tr = ConstructionTrace()
    e = tr.point("e", ORIGIN, "meeting point of the semiaxes")
    a = tr.point("a", Point(0.0, ae), "end of the minor semiaxis")
    c = tr.point("c", Point(-ce, 0.0), "end of the major semiaxis")
    o = tr.point("o", Point(0.0, ae - oa), "ae produced beyond e so that ao is the large radius")
    minor_axis = tr.line("ae", LineSpec.through(a, e))
    major_axis = tr.line("ce", LineSpec.through(c, e))
    circle_o = tr.circle("adb", CircleSpec(o, oa), "circle around o through a")

    ob = tr.line("ob", perpendicular_through(minor_axis, o), "perpendicular to ao through o")
    b = tr.point("b", min(intersect_line_circle(ob, circle_o, tol), key=lambda p: p.x), "left end of ob")

    bc = tr.line("bcd", LineSpec.through(b, c))
    hits = intersect_line_circle(bc, circle_o, tol)
    d = max(hits, key=bc.parameter_of)
    if d.distance(b) <= tol.threshold(oa):
        raise Infeasible(feas.message())
    tr.point("d", d, "second intersection of bc with the circle")

    od = tr.line("otd", LineSpec.through(o, d))
    t = tr.point("t", intersect_line_line(od, major_axis, tol), "od meets ce; tc = td")
    perp_d = tr.line("dxh", perpendicular_through(major_axis, d), "perpendicular to ce through d")
    tr.point("x", intersect_line_line(perp_d, major_axis, tol), "foot of the perpendicular")
    r_small = t.distance(d)
    circle_t = tr.circle("cd", CircleSpec(t, r_small), "circle around t with radius td")
    h = tr.point("h", max(intersect_line_circle(perp_d, circle_t, tol), key=d.distance), "below ce")
    r = tr.point("r", reflect_point(t, minor_axis), "re = te on the other side")
    z = tr.point("z", reflect_point(o, major_axis), "ze = oe on the other side")
    d2 = tr.point("d'", reflect_point(d, minor_axis), "d reflected through ae")
    h2 = tr.point("h'", reflect_point(h, minor_axis), "h reflected through ae")

    oval = FourCentreOval.from_geometry(
        [t, r], [o, z], [d, h, d2, h2], r_small, o.distance(a), ae, ce, AxisDirection.HORIZONTAL
    )
    _record_arcs(tr, oval)
    return oval, tr


def _check_b2(ea: float, ec: float, ct: float) -> None:
    _check_axes(ea, ec)
    if not ct > 0:
        raise BadParameter(f"radius ct must be positive, got {ct}")
    if not ct < ea:
        raise RadiusTooLarge(f"requires ct < ae (ct = {ct:.12g}, ae = {ea:.12g})")


def _centre_by_bisector(tr, t, x, minor_axis, tol) -> Point:
    tr.point("n", midpoint(t, x), "midpoint of tx")
    bisector = tr.line("no", perpendicular_bisector(t, x, tol), "perpendicular bisector of tx")
    return intersect_line_line(bisector, minor_axis, tol)


def _centre_by_angles(tr, t, x, minor_axis, tol) -> Point:
    # base angle at x between xt and the half-line towards e, copied at t
    e = tr.get_point("e")
    xt, xe = t - x, e - x
    base = math.atan2(abs(xt.cross(xe)), xt.dot(xe))
    tx = x - t
    turn = math.copysign(base, tx.cross(e - t))
    ray = tr.line("to", LineSpec(t, rotate_about(tx, ORIGIN, turn)), "angle xto made equal to angle txo")
    return intersect_line_line(ray, minor_axis, tol)


def _construct_b2(
    ea: float, ec: float, ct: float, tol: Tolerance, locate_o: Callable
) -> tuple[FourCentreOval, ConstructionTrace]:
    _check_b2(ea, ec, ct)
    tr = ConstructionTrace()
    e = tr.point("e", ORIGIN, "meeting point of the axes")
    c = tr.point("c", Point(0.0, ec), "upper end of the major axis")
    p = tr.point("p", Point(0.0, -ec), "lower end of the major axis")
    a = tr.point("a", Point(ea, 0.0), "right end of the minor axis")
    q = tr.point("q", Point(-ea, 0.0), "left end of the minor axis")
    major_axis = tr.line("cp", LineSpec.through(c, p))
    minor_axis = tr.line("qa", LineSpec.through(q, a))

    t = tr.point("t", c + (e - c).unit() * ct, "centre of the given small circle")
    circle_t = tr.circle("cd", CircleSpec(t, ct), "given circle around t")
    x = tr.point("x", a + (e - a).unit() * ct, "xa = ct")
    tr.segment("tx", t, x)
    o = tr.point("o", locate_o(tr, t, x, minor_axis, tol), "ot = ox, on qa produced as needed")

    ot = tr.line("otd", LineSpec.through(o, t))
    d = tr.point("d", max(intersect_line_circle(ot, circle_t, tol), key=ot.parameter_of), "ot produced")
    r_large = o.distance(a)
    tr.circle("da", CircleSpec(o, r_large), "circle around o through a and d")
    s = tr.point("s", reflect_point(o, major_axis), "se = oe on the other side")
    t2 = tr.point("t'", reflect_point(t, minor_axis), "t reflected through qa")
    d2 = tr.point("d'", reflect_point(d, major_axis))
    d3 = tr.point("d''", reflect_point(d2, minor_axis))
    d4 = tr.point("d'''", reflect_point(d, minor_axis))

    oval = FourCentreOval.from_geometry(
        [t, t2], [o, s], [d, d2, d3, d4], ct, r_large, ea, ec, AxisDirection.VERTICAL
    )
    _record_arcs(tr, oval)
    return oval, tr


def construct_oval_b2(
    ea: float, ec: float, ct: float, tol: Tolerance = DEFAULT_TOL
) -> tuple[FourCentreOval, ConstructionTrace]:
    """Oval with minor semiaxis ``ea``, major semiaxis ``ec`` and small radius ``ct``.

    The large-arc centre ``o`` is where the perpendicular bisector of ``tx``
    meets the minor axis line.
    """
    return _construct_b2(ea, ec, ct, tol, _centre_by_bisector)


def construct_oval_b2_angle_variant(
    ea: float, ec: float, ct: float, tol: Tolerance = DEFAULT_TOL
) -> tuple[FourCentreOval, ConstructionTrace]:
    """Same oval as :func:`construct_oval_b2`, locating ``o`` by equal base angles at ``t`` and ``x``."""
    return _construct_b2(ea, ec, ct, tol, _centre_by_angles)
