from .classic import ClassicKind, construct_classic_oval
from .encompassing import (
    CaseTag,
    EncompassingResult,
    encircle_adjacent,
    encircle_overlapping,
    encircle_separate_family,
    encircle_separate_single,
    encompassing_residuals,
    require_valid_encompassing,
    validate_encompassing,
)
from .family import b2_family_equivalence, oval_from_major_axis_and_radii
from .ovals import (
    B1Feasibility,
    b1_feasibility,
    b1_feasible,
    construct_oval_b1,
    construct_oval_b2,
    construct_oval_b2_angle_variant,
)
from .trace import ConstructionTrace, StepKind, TraceStep

__all__ = [
    "B1Feasibility",
    "CaseTag",
    "ClassicKind",
    "ConstructionTrace",
    "EncompassingResult",
    "StepKind",
    "TraceStep",
    "b1_feasibility",
    "b1_feasible",
    "b2_family_equivalence",
    "construct_classic_oval",
    "construct_oval_b1",
    "construct_oval_b2",
    "construct_oval_b2_angle_variant",
    "encircle_adjacent",
    "encircle_overlapping",
    "encircle_separate_family",
    "encircle_separate_single",
    "encompassing_residuals",
    "oval_from_major_axis_and_radii",
    "require_valid_encompassing",
    "validate_encompassing",
]
