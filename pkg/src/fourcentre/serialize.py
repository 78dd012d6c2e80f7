"""JSON helpers shared by the model, the constructions and the CLI."""
from __future__ import annotations

import json
import re
from typing import Any

from .kernel import CircleSpec, LineSpec, Point

SIGNIFICANT_DIGITS = 12


def num(value: float) -> float:
    """Round to 12 significant digits; ``+ 0.0`` folds ``-0.0`` into ``0.0``."""
    return float(f"{value:.{SIGNIFICANT_DIGITS}g}") + 0.0


def point_to_json(p: Point) -> list[float]:
    return [num(p.x), num(p.y)]


def point_from_json(data: Any) -> Point:
    if not (isinstance(data, (list, tuple)) and len(data) == 2):
        raise ValueError(f"expected [x, y], got {data!r}")
    return Point(float(data[0]), float(data[1]))


def circle_to_json(c: CircleSpec) -> dict:
    return {"centre": point_to_json(c.centre), "radius": num(c.radius)}


def circle_from_json(data: dict) -> CircleSpec:
    return CircleSpec(point_from_json(data["centre"]), float(data["radius"]))


def line_to_json(line: LineSpec) -> dict:
    return {"anchor": point_to_json(line.anchor), "direction": point_to_json(line.direction)}


_PAIR = re.compile(r"\[\s+(\S+),\s+(\S+)\s+\]")


def dumps(payload: Any) -> str:
    """Indented JSON with ``[x, y]`` pairs kept on one line."""
    text = json.dumps(payload, indent=2, ensure_ascii=True)
    return _PAIR.sub(r"[\1, \2]", text) + "\n"
