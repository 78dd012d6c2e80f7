"""Compass-and-straightedge constructions of 4-centre ovals and enclosing circles."""
from .constructions import (
    CaseTag,
    ClassicKind,
    ConstructionTrace,
    EncompassingResult,
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
)
from .kernel import CircleSpec, LineSpec, Point, Tolerance
from .model import ArcSpec, AxisDirection, FourCentreOval, OvalReport, ellipse_deviation, measure_semiaxes, validate_oval
from .render import RenderStyle, Viewport, render_encompassing, render_oval

__version__ = "0.1.0"
