import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from fourcentre.constructions import (
    CaseTag,
    ClassicKind,
    ConstructionTrace,
    StepKind,
    b1_feasibility,
    b1_feasible,
    b2_family_equivalence,
    construct_classic_oval,
    construct_oval_b1,
    construct_oval_b2,
    construct_oval_b2_angle_variant,
    encircle_adjacent,
    encircle_overlapping,
    encircle_separate_family,
    encircle_separate_single,
    oval_from_major_axis_and_radii,
    validate_encompassing,
)
from fourcentre.errors import (
    BadAxes,
    BadParameter,
    BadRadii,
    ConcentricIdentical,
    DegenerateFamily,
    Infeasible,
    NotAdjacent,
    NotOverlapping,
    NotSeparate,
    RadiusTooLarge,
    TooFarApart,
)
from fourcentre.kernel import CircleSpec, LineSpec, Point, reflect_point
from fourcentre.model import AxisDirection, measure_semiaxes, validate_oval

SQ2 = math.sqrt(2)


def close(p, q, eps=1e-9):
    return p.distance(q) <= eps


def circle(x, y, r):
    return CircleSpec(Point(x, y), r)


# feasibility


def test_feasibility_examples():
    assert b1_feasible(1, 2, 3)
    assert not b1_feasible(1, 2, 2.5)
    with pytest.raises(BadAxes):
        b1_feasible(1, 1, 3)


def test_feasibility_message_names_the_bound():
    msg = b1_feasibility(1, 2, 2.5).message()
    assert "oa > oc" in msg


# large-radius construction


def test_b1_example():
    oval, tr = construct_oval_b1(1, 2, 3)
    assert oval.r_small == pytest.approx(0.5, abs=1e-12)
    assert oval.r_large == pytest.approx(3, abs=1e-12)
    e, t = tr.get_point("e"), tr.get_point("t")
    assert t.distance(e) == pytest.approx(1.5, abs=1e-12)
    assert abs(t.y) < 1e-12
    assert oval.major_axis_direction is AxisDirection.HORIZONTAL
    assert validate_oval(oval).valid


def test_b1_tangent_point_equidistant():
    _, tr = construct_oval_b1(1, 2, 3)
    t = tr.get_point("t")
    assert t.distance(tr.get_point("c")) == pytest.approx(t.distance(tr.get_point("d")), abs=1e-12)


def test_b1_infeasible():
    with pytest.raises(Infeasible, match="oa > oc"):
        construct_oval_b1(1, 2, 2.5)


def test_b1_bad_axes():
    with pytest.raises(BadAxes):
        construct_oval_b1(2, 1, 5)


def test_b1_reflected_output_still_valid():
    oval, _ = construct_oval_b1(1, 2, 3)
    axis = LineSpec(Point(0, 0), Point(1, 0))
    assert validate_oval(oval.transformed(lambda p: reflect_point(p, axis))).valid


def test_b1_trace_order():
    _, tr = construct_oval_b1(1, 2, 3)
    labels = tr.point_labels()
    assert labels[:4] == ["e", "a", "c", "o"]
    assert len(labels) == len(set(labels))
    assert [s.label for s in tr.of_kind(StepKind.ARC)] == ["arc0", "arc1", "arc2", "arc3"]


# small-radius construction


def test_b2_example():
    oval, tr = construct_oval_b2(2, 3, 1)
    o = tr.get_point("o")
    assert close(o, Point(-1.5, 0), 1e-12)
    assert oval.r_large == pytest.approx(3.5, abs=1e-12)
    assert o.distance(tr.get_point("t")) == pytest.approx(2.5, abs=1e-12)
    assert oval.major_axis_direction is AxisDirection.VERTICAL


def test_b2_chain():
    oval, tr = construct_oval_b2(2, 3, 1)
    o, t, d, x, a = (tr.get_point(k) for k in "otdxa")
    ct = oval.r_small
    links = [o.distance(d), o.distance(t) + ct, o.distance(x) + x.distance(a), o.distance(a)]
    for link in links[1:]:
        assert link == pytest.approx(links[0], rel=1e-12)


@pytest.mark.parametrize("args, err", [((2, 3, 2), RadiusTooLarge), ((2, 2, 1), BadAxes), ((2, 3, 0), BadParameter)])
def test_b2_errors(args, err):
    with pytest.raises(err):
        construct_oval_b2(*args)


@pytest.mark.parametrize("ct", [1, 1.999, 0.01])
def test_angle_variant_agrees(ct):
    a, _ = construct_oval_b2(2, 3, ct)
    b, _ = construct_oval_b2_angle_variant(2, 3, ct)
    for p, q in zip(a.centres, b.centres):
        assert close(p, q)


def test_angle_variant_error():
    with pytest.raises(RadiusTooLarge):
        construct_oval_b2_angle_variant(2, 3, 2)


axes = st.tuples(st.floats(0.1, 10), st.floats(1.01, 3)).map(lambda t: (t[0], t[0] * t[1]))


@settings(max_examples=200, deadline=None)
@given(axes, st.floats(0.01, 0.99))
def test_b2_round_trip_property(ax, frac):
    ea, ec = ax
    oval, _ = construct_oval_b2(ea, ec, frac * ea)
    assert validate_oval(oval).valid
    assert measure_semiaxes(oval) == pytest.approx((ea, ec), rel=1e-9)


@settings(max_examples=200, deadline=None)
@given(axes, st.floats(1.001, 5))
def test_b1_round_trip_property(ax, stretch):
    ae, ce = ax
    oa = stretch * (ae**2 + ce**2) / (2 * ae)
    assume(b1_feasible(ae, ce, oa))
    oval, _ = construct_oval_b1(ae, ce, oa)
    assert validate_oval(oval).valid
    assert measure_semiaxes(oval) == pytest.approx((ae, ce), rel=1e-9)
    assert oval.r_large == pytest.approx(oa, rel=1e-9)


# enclosing circles


def test_adjacent_example():
    res = encircle_adjacent(circle(0, 0, 1), circle(3, 0, 2))
    assert res.case_tag is CaseTag.ADJACENT
    assert close(res.circle.centre, Point(7 / 3, 4 * SQ2 / 3))
    assert res.circle.radius == pytest.approx(4, abs=1e-12)
    assert validate_encompassing(res, (circle(0, 0, 1), circle(3, 0, 2))) == []


def test_adjacent_equal_circles():
    res = encircle_adjacent(circle(0, 0, 1), circle(2, 0, 1))
    assert close(res.circle.centre, Point(1, 0))
    assert res.circle.radius == pytest.approx(2)


def test_adjacent_order_independent():
    a = encircle_adjacent(circle(0, 0, 1), circle(3, 0, 2))
    b = encircle_adjacent(circle(3, 0, 2), circle(0, 0, 1))
    assert close(a.circle.centre, b.circle.centre)
    assert close(a.tangency_points[0], b.tangency_points[1])


def test_adjacent_gap():
    with pytest.raises(NotAdjacent):
        encircle_adjacent(circle(0, 0, 1), circle(4, 0, 2))


def test_overlapping_example():
    given_ = (circle(0, 0, 2), circle(3, 0, 2))
    res = encircle_overlapping(*given_)
    x, r = res.circle.centre, res.circle.radius
    assert r == pytest.approx(x.distance(Point(0, 0)) + 2, rel=1e-12)
    assert r == pytest.approx(x.distance(Point(3, 0)) + 2, rel=1e-12)
    assert validate_encompassing(res, given_) == []


def test_overlapping_errors():
    with pytest.raises(ConcentricIdentical):
        encircle_overlapping(circle(0, 0, 2), circle(0, 0, 2))
    with pytest.raises(NotOverlapping):
        encircle_overlapping(circle(0, 0, 1), circle(5, 0, 1))


def test_separate_single_example():
    res = encircle_separate_single(circle(0, 0, 1), circle(4, 0, 1))
    assert close(res.circle.centre, Point(2, 0))
    assert res.circle.radius == pytest.approx(3)
    assert close(res.tangency_points[0], Point(-1, 0))
    assert close(res.tangency_points[1], Point(5, 0))


def test_separate_single_errors():
    with pytest.raises(TooFarApart):
        encircle_separate_single(circle(0, 0, 1), circle(20, 0, 1))
    with pytest.raises(NotSeparate):
        encircle_separate_single(circle(0, 0, 2), circle(3, 0, 2))


def test_family_examples():
    a = encircle_separate_family(circle(0, 0, 1), circle(4, 0, 1), 0)
    assert close(a.circle.centre, Point(2, 0)) and a.circle.radius == pytest.approx(3)
    b = encircle_separate_family(circle(0, 0, 1), circle(4, 0, 1), 1)
    assert close(b.circle.centre, Point(2, math.sqrt(5)))
    assert b.circle.radius == pytest.approx(4)


@pytest.mark.parametrize("d", [0, 0.5, 1, 2, 5])
def test_family_sweep_valid(d):
    given_ = (circle(0, 0, 1), circle(4, 0, 1))
    res = encircle_separate_family(*given_, d)
    assert validate_encompassing(res, given_) == []


def test_family_affine_in_parameter():
    given_ = (circle(1, -2, 0.5), circle(6, 1, 1.5))
    r0 = encircle_separate_family(*given_, 0).circle.radius
    for d in (0.1, 0.5, 1, 2, 5):
        assert encircle_separate_family(*given_, d).circle.radius - r0 == pytest.approx(d, abs=1e-12)


def test_family_errors():
    with pytest.raises(BadParameter):
        encircle_separate_family(circle(0, 0, 1), circle(4, 0, 1), -1)
    with pytest.raises(NotSeparate):
        encircle_separate_family(circle(0, 0, 1), circle(1.5, 0, 1), 1)


def test_encompassing_json_shape():
    res = encircle_adjacent(circle(0, 0, 1), circle(3, 0, 2))
    data = res.to_dict()
    assert set(data) == {"circle", "case_tag", "tangency_points"}
    assert data["case_tag"] == "adjacent"
    assert "trace" in res.to_dict(include_trace=True)


# ovals from the family


def test_family_oval_example():
    oval, _ = oval_from_major_axis_and_radii(6, 1, 4)
    assert validate_oval(oval).valid
    assert oval.semiaxis_minor == pytest.approx(4 - math.sqrt(5), abs=1e-12)
    assert measure_semiaxes(oval) == pytest.approx((4 - math.sqrt(5), 3), rel=1e-9)


@pytest.mark.parametrize("args", [(6, 1, 3), (8, 1, 4), (8, 1, 3)])
def test_family_oval_degenerate(args):
    with pytest.raises(DegenerateFamily):
        oval_from_major_axis_and_radii(*args)


def test_family_oval_bad_radii():
    with pytest.raises(BadRadii):
        oval_from_major_axis_and_radii(8, 4, 6)


@pytest.mark.parametrize("args", [(2, 3, 1), (5, 8, 2), (2, 3, 1.9)])
def test_b2_family_equivalence(args):
    assert b2_family_equivalence(*args)


def test_equivalence_propagates_errors():
    with pytest.raises(RadiusTooLarge):
        b2_family_equivalence(2, 3, 2)


# classic ovals


@pytest.mark.parametrize("kind", ["S1", "S2", "S3", "S4"])
def test_classic_valid(kind):
    oval, tr = construct_classic_oval(kind)
    assert validate_oval(oval).valid
    labels = tr.point_labels()
    assert len(labels) == len(set(labels))


def test_vesica_rhombus_side():
    oval, _ = construct_classic_oval(ClassicKind.S4)
    c = oval.centres
    for i in range(4):
        assert c[i].distance(c[(i + 1) % 4]) == pytest.approx(1, abs=1e-12)


def test_clavius_reproduces_s1():
    s1, _ = construct_classic_oval("S1")
    cl, _ = construct_classic_oval("Clavius", clavius_half_angle=math.pi / 6)
    assert validate_oval(cl).valid
    for p, q in zip(s1.centres + s1.junctions, cl.centres + cl.junctions):
        assert close(p, q)


def test_classic_errors():
    with pytest.raises(BadParameter):
        construct_classic_oval("S2", scale=0)
    with pytest.raises(BadParameter):
        construct_classic_oval("Clavius")
    with pytest.raises(BadParameter):
        construct_classic_oval("Clavius", clavius_half_angle=math.pi / 2)


def test_classic_scales():
    a, _ = construct_classic_oval("S3", scale=1)
    b, _ = construct_classic_oval("S3", scale=2.5)
    assert b.semiaxis_major == pytest.approx(2.5 * a.semiaxis_major)


# trace


def test_trace_rejects_duplicate_point_labels():
    tr = ConstructionTrace()
    tr.point("a", Point(0, 0))
    with pytest.raises(ValueError):
        tr.point("a", Point(1, 0))


def test_trace_json():
    _, tr = construct_oval_b2(2, 3, 1)
    data = tr.to_dict()
    kinds = {step["kind"] for step in data["steps"]}
    assert kinds <= {k.value for k in StepKind}
    assert [s["label"] for s in data["steps"] if s["kind"] == "point"] == tr.point_labels()
