"""Fixed-proportion ovals built from a seed figure.

Each seed fixes a rhombus of centres and the small radius; the large radius
follows from tangency. ``scale`` is the seed's characteristic length:

* S1: two equilateral triangles of side ``scale`` sharing a side on the major
  axis; small arcs of radius ``scale`` around the ends of the shared side.
* S2: two touching circles of radius ``scale``; the rhombus is a square.
* S3: two squares of side ``scale`` sharing a side; the centres are the
  square centres and the ends of the shared side.
* S4: two circles of radius ``scale``, each through the other's centre.
* Clavius: S1 with isosceles triangles whose apex half-angle is given.
"""
from __future__ import annotations

import math
from enum import Enum

from ..errors import BadParameter
from ..kernel import DEFAULT_TOL, CircleSpec, Point, Tolerance, intersect_circle_circle
from ..model import AxisDirection, FourCentreOval
from .ovals import _record_arcs
from .trace import ConstructionTrace


class ClassicKind(str, Enum):
    S1 = "S1"
    S2 = "S2"
    S3 = "S3"
    S4 = "S4"
    CLAVIUS = "Clavius"


def _rhombus_oval(
    tr: ConstructionTrace, small: tuple[Point, Point], large: tuple[Point, Point], r_small: float
) -> FourCentreOval:
    s_pos, s_neg = small
    l_pos, l_neg = large
    r_large = l_neg.distance(s_pos) + r_small
    junctions = []
    for n, (lc, sc) in enumerate(((l_neg, s_pos), (l_neg, s_neg), (l_pos, s_neg), (l_pos, s_pos)), 1):
        junctions.append(tr.point(f"j{n}", lc + (sc - lc).unit() * r_large, "large centre, small centre, junction in line"))
    major = s_pos.x + r_small
    minor = r_large - l_pos.y
    if not (0 < minor < major and r_small < r_large):
        raise BadParameter(f"seed yields no proper oval (minor {minor:.12g}, major {major:.12g})")
    oval = FourCentreOval.from_geometry(
        [s_pos, s_neg], [l_pos, l_neg], junctions, r_small, r_large, minor, major, AxisDirection.HORIZONTAL
    )
    _record_arcs(tr, oval)
    return oval


def _triangles(tr: ConstructionTrace, side: float, half_angle: float) -> FourCentreOval:
    a = tr.point("A", Point(-side / 2, 0.0), "end of the shared base")
    b = tr.point("B", Point(side / 2, 0.0), "end of the shared base")
    h = (side / 2) / math.tan(half_angle)
    c = tr.point("C", Point(0.0, h), "apex above the base")
    d = tr.point("D", Point(0.0, -h), "apex below the base")
    for p, q, label in ((a, b, "AB"), (a, c, "AC"), (b, c, "BC"), (a, d, "AD"), (b, d, "BD")):
        tr.segment(label, p, q)
    return _rhombus_oval(tr, (b, a), (c, d), side)


def construct_classic_oval(
    kind: ClassicKind | str,
    scale: float = 1.0,
    clavius_half_angle: float | None = None,
    tol: Tolerance = DEFAULT_TOL,
) -> tuple[FourCentreOval, ConstructionTrace]:
    kind = ClassicKind(kind)
    if not (math.isfinite(scale) and scale > 0):
        raise BadParameter(f"scale must be positive, got {scale}")
    if (kind is ClassicKind.CLAVIUS) != (clavius_half_angle is not None):
        raise BadParameter("a half-angle is required for Clavius and only for Clavius")
    s = scale
    tr = ConstructionTrace()

    if kind is ClassicKind.S1:
        return _triangles(tr, s, math.pi / 6), tr

    if kind is ClassicKind.CLAVIUS:
        alpha = clavius_half_angle
        if not 0 < alpha < math.pi / 2:
            raise BadParameter(f"half-angle must lie in (0, pi/2), got {alpha}")
        return _triangles(tr, s, alpha), tr

    if kind is ClassicKind.S2:
        a = tr.point("A", Point(-s, 0.0), "centre of the left circle")
        b = tr.point("B", Point(s, 0.0), "centre of the right circle")
        tr.circle("left", CircleSpec(a, s))
        tr.circle("right", CircleSpec(b, s))
        tr.point("E", Point(0.0, 0.0), "contact of the two circles")
        c = tr.point("C", Point(0.0, s), "square vertex above the contact")
        d = tr.point("D", Point(0.0, -s), "square vertex below the contact")
        return _rhombus_oval(tr, (b, a), (c, d), s), tr

    if kind is ClassicKind.S3:
        for label, x, y in (("P", -s, s / 2), ("Q", s, s / 2), ("R", s, -s / 2), ("S", -s, -s / 2)):
            tr.point(label, Point(x, y), "corner of the double square")
        c = tr.point("C", Point(0.0, s / 2), "top of the shared side")
        d = tr.point("D", Point(0.0, -s / 2), "bottom of the shared side")
        a = tr.point("A", Point(-s / 2, 0.0), "centre of the left square")
        b = tr.point("B", Point(s / 2, 0.0), "centre of the right square")
        return _rhombus_oval(tr, (b, a), (c, d), s / math.sqrt(2)), tr

    # S4: vesica piscis
    a = tr.point("A", Point(-s / 2, 0.0), "centre of the left circle")
    b = tr.point("B", Point(s / 2, 0.0), "centre of the right circle")
    left = tr.circle("left", CircleSpec(a, s))
    right = tr.circle("right", CircleSpec(b, s))
    upper, lower = intersect_circle_circle(left, right, tol)
    c = tr.point("C", upper, "upper crossing of the circles")
    d = tr.point("D", lower, "lower crossing of the circles")
    return _rhombus_oval(tr, (b, a), (c, d), s), tr
