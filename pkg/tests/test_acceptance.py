"""Acceptance criteria, one test per criterion.

Each test carries an ``acceptance(n, title)`` marker; ``conftest.py`` prints a
pass/fail line per criterion at the end of the run. All random draws are seeded.
"""
import json
import math
import random
import xml.etree.ElementTree as ET

import pytest

from fourcentre.cli import main
from fourcentre.constructions import (
    b1_feasibility,
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
)
from fourcentre.kernel import CircleSpec, Point, Tolerance
from fourcentre.model import measure_semiaxes, validate_oval
from fourcentre.render import render_oval

N = 1000
REL = 1e-9
TOL = Tolerance()
SEED = 20240611


def rng(offset):
    return random.Random(SEED + offset)


def rel_close(value, expected, rel=REL):
    return abs(value - expected) <= rel * max(abs(expected), 1.0)


def b1_bound(ae, ce):
    return (ae**2 + ce**2) / (2 * ae)


def draw_axes(r):
    ae = r.uniform(0.1, 10)
    ce = r.uniform(ae, 20)
    while not ce > ae:
        ce = r.uniform(ae, 20)
    return ae, ce


def draw_b1(r):
    ae, ce = draw_axes(r)
    bound = b1_bound(ae, ce)
    return ae, ce, bound + r.uniform(1e-6, 1.0) * bound


def draw_b2(r):
    ea, ec = draw_axes(r)
    ct = r.uniform(0, ea)
    while not 0 < ct < ea:
        ct = r.uniform(0, ea)
    return ea, ec, ct


@pytest.mark.acceptance(1, "B1 round-trip")
def test_criterion_01_b1_round_trip():
    r = rng(1)
    for _ in range(N):
        ae, ce, oa = draw_b1(r)
        oval, _ = construct_oval_b1(ae, ce, oa)
        assert validate_oval(oval).valid, (ae, ce, oa)
        minor, major = measure_semiaxes(oval)
        assert rel_close(minor, ae) and rel_close(major, ce), (ae, ce, oa, minor, major)
        assert rel_close(oval.r_large, oa)
        tr = construct_oval_b1(ae, ce, oa)[1]
        t = tr.get_point("t")
        assert rel_close(t.distance(tr.get_point("c")), t.distance(tr.get_point("d")))


@pytest.mark.acceptance(2, "B2 round-trip and radius chain")
def test_criterion_02_b2_round_trip():
    r = rng(2)
    for _ in range(N):
        ea, ec, ct = draw_b2(r)
        oval, tr = construct_oval_b2(ea, ec, ct)
        assert validate_oval(oval).valid, (ea, ec, ct)
        minor, major = measure_semiaxes(oval)
        assert rel_close(minor, ea) and rel_close(major, ec), (ea, ec, ct)
        o, t, d, x, a = (tr.get_point(k) for k in "otdxa")
        od = o.distance(d)
        for link in (o.distance(t) + ct, o.distance(x) + x.distance(a), o.distance(a)):
            assert rel_close(link, od), (ea, ec, ct, link, od)


@pytest.mark.acceptance(3, "Feasibility equivalence")
def test_criterion_03_feasibility_equivalence():
    r = rng(3)
    disagreements = 0
    for _ in range(100_000):
        ae, ce = draw_axes(r)
        bound = b1_bound(ae, ce)
        oa = r.uniform(0.5, 1.5) * bound
        if abs(oa - bound) <= REL * bound:
            continue
        f = b1_feasibility(ae, ce, oa)
        disagreements += f.geometric != f.closed_form
    assert disagreements == 0
    assert b1_feasibility(1, 2, 3).feasible
    assert not b1_feasibility(1, 2, 2.5).feasible


def _random_pair(r, distance_of):
    r1, r2 = r.uniform(0.1, 10), r.uniform(0.1, 10)
    c1 = Point(r.uniform(-10, 10), r.uniform(-10, 10))
    angle = r.uniform(0, 2 * math.pi)
    dist = distance_of(r, r1, r2)
    c2 = c1 + Point(math.cos(angle), math.sin(angle)) * dist
    return CircleSpec(c1, r1), CircleSpec(c2, r2)


def _overlap_distance(r, r1, r2):
    lo, hi = abs(r1 - r2), r1 + r2
    return lo + r.uniform(0.01, 0.99) * (hi - lo)


def _single_distance(r, r1, r2):
    small, large = min(r1, r2), max(r1, r2)
    lo, hi = r1 + r2, 3 * large + small
    return lo + r.uniform(0.01, 0.99) * (hi - lo)


def _family_distance(r, r1, r2):
    return (r1 + r2) * r.uniform(1.01, 4)


def _check_tangency(res, given):
    x, big_r = res.circle.centre, res.circle.radius
    for c, t in zip(given, res.tangency_points):
        assert rel_close(x.distance(c.centre) + c.radius, big_r, REL), (given, res.circle)
        u, v = t - x, c.centre - x
        assert abs(u.cross(v)) <= TOL.threshold(big_r * big_r), (given, res.circle)


@pytest.mark.acceptance(4, "Encompassing tangency")
def test_criterion_04_encompassing_tangency():
    r = rng(4)
    cases = [
        (lambda r, r1, r2: r1 + r2, encircle_adjacent),
        (_overlap_distance, encircle_overlapping),
        (_single_distance, encircle_separate_single),
    ]
    for distance_of, fn in cases:
        for _ in range(N):
            given = _random_pair(r, distance_of)
            _check_tangency(fn(*given), given)
    for _ in range(N):
        given = _random_pair(r, _family_distance)
        _check_tangency(encircle_separate_family(*given, r.uniform(0, 5)), given)

    adj = encircle_adjacent(CircleSpec(Point(0, 0), 1), CircleSpec(Point(3, 0), 2))
    assert rel_close(adj.circle.radius, 4)
    fam = encircle_separate_family(CircleSpec(Point(0, 0), 1), CircleSpec(Point(4, 0), 1), 1)
    assert rel_close(fam.circle.radius, 4)
    assert fam.circle.centre.distance(Point(2, math.sqrt(5))) <= 1e-9


@pytest.mark.acceptance(5, "Family affinity")
def test_criterion_05_family_affinity():
    given = (CircleSpec(Point(0, 0), 1), CircleSpec(Point(4, 0), 1))
    r0 = encircle_separate_family(*given, 0).circle.radius
    for d in (0.1, 0.5, 1, 2, 5):
        assert abs(encircle_separate_family(*given, d).circle.radius - r0 - d) <= 1e-9


@pytest.mark.acceptance(6, "B2 and family equivalence")
def test_criterion_06_b2_family_equivalence():
    r = rng(6)
    for _ in range(N):
        ea, ec, ct = draw_b2(r)
        assert b2_family_equivalence(ea, ec, ct), (ea, ec, ct)
        direct, _ = construct_oval_b2(ea, ec, ct)
        rebuilt = oval_from_major_axis_and_radii(2 * ec, ct, direct.r_large)[0].quarter_turn()
        thr = TOL.threshold(max(direct.r_large, ec))
        for p, q in zip(direct.centres + direct.junctions, rebuilt.centres + rebuilt.junctions):
            assert p.distance(q) <= thr, (ea, ec, ct)


@pytest.mark.acceptance(7, "Angle variant agreement")
def test_criterion_07_variant_agreement():
    r = rng(7)
    for _ in range(N):
        ea, ec, ct = draw_b2(r)
        a, _ = construct_oval_b2(ea, ec, ct)
        b, _ = construct_oval_b2_angle_variant(ea, ec, ct)
        thr = TOL.threshold(max(a.r_large, ec))
        for p, q in zip(a.centres, b.centres):
            assert p.distance(q) <= thr, (ea, ec, ct)


@pytest.mark.acceptance(8, "Classic ovals")
def test_criterion_08_classic_ovals():
    for kind in ("S1", "S2", "S3", "S4"):
        assert validate_oval(construct_classic_oval(kind, 1.0)[0]).valid, kind
    s1, _ = construct_classic_oval("S1", 1.0)
    clavius, _ = construct_classic_oval("Clavius", 1.0, math.pi / 6)
    assert validate_oval(clavius).valid
    for p, q in zip(s1.centres + s1.junctions, clavius.centres + clavius.junctions):
        assert p.distance(q) <= 1e-9
    assert rel_close(s1.r_small, clavius.r_small) and rel_close(s1.r_large, clavius.r_large)


@pytest.mark.acceptance(9, "Rendering determinism")
def test_criterion_09_rendering_determinism():
    oval, _ = construct_oval_b1(1, 2, 3)
    first, second = render_oval(oval), render_oval(oval)
    assert first.encode() == second.encode()
    root = ET.fromstring(first.encode())
    paths = root.findall(".//{http://www.w3.org/2000/svg}path[@class='oval-arc']")
    assert len(paths) == 4
    ends = []
    for path in paths:
        tok = path.get("d").split()
        ends.append(((float(tok[1]), float(tok[2])), (float(tok[-2]), float(tok[-1]))))
    for i in range(4):
        end, start = ends[i][1], ends[(i + 1) % 4][0]
        assert math.dist(end, start) <= 1e-5


@pytest.mark.acceptance(10, "CLI contract")
def test_criterion_10_cli_contract(tmp_path, capsys):
    out = tmp_path / "b1.json"
    assert main(["b1", "--minor", "1", "--major", "2", "--radius-large", "3", "--format", "json",
                 "--json-out", str(out)]) == 0
    assert json.loads(out.read_text())["r_small"] == pytest.approx(0.5)
    assert main(["b1", "--minor", "1", "--major", "2", "--radius-large", "2.5"]) == 2
    with pytest.raises(SystemExit) as info:
        main(["b1", "--minor", "1", "--major", "2"])
    assert info.value.code == 1
    assert main(["validate", "--input", str(out)]) == 0
    capsys.readouterr()
