"""Ovals from the family of enclosing circles of two equal circles."""
from __future__ import annotations

from ..errors import BadRadii, DegenerateFamily
from ..kernel import DEFAULT_TOL, CircleSpec, LineSpec, Point, Tolerance, reflect_point
from ..model import AxisDirection, FourCentreOval
from .encompassing import _family_core, _setup
from .ovals import _record_arcs, construct_oval_b2
from .trace import ConstructionTrace


def oval_from_major_axis_and_radii(
    qb: float, r_small: float, r_large: float, tol: Tolerance = DEFAULT_TOL
) -> tuple[FourCentreOval, ConstructionTrace]:
    """Oval with full major axis ``qb`` and the two given arc radii.

    Two circles of radius ``r_small`` are placed with outer points at
    ``-qb/2`` and ``qb/2``. The family member with ``d = r_large - qb/2``
    encloses them, and reflecting it across the major axis closes the oval.
    The minor semiaxis is measured from the result.
    """
    if not (qb > 0 and r_small > 0 and r_large > 0):
        raise BadRadii(f"axis and radii must be positive, got qb={qb}, r_small={r_small}, r_large={r_large}")
    if not 2 * r_small < qb:
        raise BadRadii(f"requires 2 r_small < qb (2 r_small = {2 * r_small:.12g}, qb = {qb:.12g})")
    d = r_large - r_small - (qb - 2 * r_small) / 2
    if d <= tol.threshold(qb):
        raise DegenerateFamily(f"requires r_large > qb/2 (d = {d:.12g})")

    half_gap = qb / 2 - r_small
    left = CircleSpec(Point(-half_gap, 0.0), r_small)
    right = CircleSpec(Point(half_gap, 0.0), r_small)
    # equal circles may overlap here, so the separateness check is skipped
    s = _setup(left, right)
    res = _family_core(s, d, tol)
    tr = res.trace
    axis = LineSpec(Point(0.0, 0.0), Point(1.0, 0.0))
    x = res.circle.centre
    x2 = tr.point("x'", reflect_point(x, axis), "x reflected through the major axis")
    f, dd = res.tangency_points
    f2 = tr.point("f'", reflect_point(f, axis))
    d2 = tr.point("d'", reflect_point(dd, axis))
    minor = r_large - x.distance(Point(0.0, 0.0))
    oval = FourCentreOval.from_geometry(
        [left.centre, right.centre], [x, x2], [f, dd, f2, d2],
        r_small, res.circle.radius, minor, qb / 2, AxisDirection.HORIZONTAL,
    )
    _record_arcs(tr, oval)
    return oval, tr


def b2_family_equivalence(ea: float, ec: float, ct: float, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Rebuild the small-radius oval through the enclosing-circle family and compare.

    Both ovals are brought to the major-vertical pose; every centre and
    junction must agree within ``tol``.
    """
    direct, _ = construct_oval_b2(ea, ec, ct, tol)
    rebuilt, _ = oval_from_major_axis_and_radii(2 * ec, ct, direct.r_large, tol)
    rebuilt = rebuilt.quarter_turn()
    thr = tol.threshold(max(direct.r_large, ec))
    pairs = list(zip(direct.centres, rebuilt.centres)) + list(zip(direct.junctions, rebuilt.junctions))
    return all(p.distance(q) <= thr for p, q in pairs)
