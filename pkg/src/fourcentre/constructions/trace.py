from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Iterator

from ..kernel import CircleSpec, LineSpec, Point
from ..model import ArcSpec
from ..serialize import circle_to_json, line_to_json, point_to_json


class StepKind(str, Enum):
    POINT = "point"
    LINE = "line"
    CIRCLE = "circle"
    ARC = "arc"
    SEGMENT = "segment"


@dataclass(frozen=True)
class TraceStep:
    label: str
    kind: StepKind
    geometry: Any
    note: str = ""

    def to_dict(self) -> dict:
        g = self.geometry
        if self.kind is StepKind.POINT:
            geometry = point_to_json(g)
        elif self.kind is StepKind.LINE:
            geometry = line_to_json(g)
        elif self.kind is StepKind.CIRCLE:
            geometry = circle_to_json(g)
        elif self.kind is StepKind.ARC:
            geometry = g.to_dict()
        else:
            geometry = [point_to_json(g[0]), point_to_json(g[1])]
        return {"label": self.label, "kind": self.kind.value, "geometry": geometry, "note": self.note}


@dataclass
class ConstructionTrace:
    """Ordered record of the labelled objects a construction produced."""

    steps: list[TraceStep] = field(default_factory=list)

    def __iter__(self) -> Iterator[TraceStep]:
        return iter(self.steps)

    def __len__(self) -> int:
        return len(self.steps)

    def point(self, label: str, p: Point, note: str = "") -> Point:
        if label in self.point_labels():
            raise ValueError(f"point label {label!r} already used in this trace")
        self.steps.append(TraceStep(label, StepKind.POINT, p, note))
        return p

    def line(self, label: str, line: LineSpec, note: str = "") -> LineSpec:
        self.steps.append(TraceStep(label, StepKind.LINE, line, note))
        return line

    def circle(self, label: str, c: CircleSpec, note: str = "") -> CircleSpec:
        self.steps.append(TraceStep(label, StepKind.CIRCLE, c, note))
        return c

    def arc(self, label: str, a: ArcSpec, note: str = "") -> ArcSpec:
        self.steps.append(TraceStep(label, StepKind.ARC, a, note))
        return a

    def segment(self, label: str, p: Point, q: Point, note: str = "") -> tuple[Point, Point]:
        self.steps.append(TraceStep(label, StepKind.SEGMENT, (p, q), note))
        return (p, q)

    def point_labels(self) -> list[str]:
        return [s.label for s in self.steps if s.kind is StepKind.POINT]

    def get_point(self, label: str) -> Point:
        for s in self.steps:
            if s.kind is StepKind.POINT and s.label == label:
                return s.geometry
        raise KeyError(label)

    def of_kind(self, kind: StepKind) -> list[TraceStep]:
        return [s for s in self.steps if s.kind is kind]

    def to_dict(self) -> dict:
        return {"steps": [s.to_dict() for s in self.steps]}
