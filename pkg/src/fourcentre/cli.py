"""``oval`` command line front end.

Exit codes: 0 success, 1 usage/IO/parse error, 2 geometric precondition
failure (or an invalid oval for ``oval validate``).
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .constructions import (
    ClassicKind,
    construct_classic_oval,
    construct_oval_b1,
    construct_oval_b2,
    encircle_adjacent,
    encircle_overlapping,
    encircle_separate_family,
    encircle_separate_single,
    oval_from_major_axis_and_radii,
)
from .errors import GeometryError
from .kernel import CircleSpec, Point, Tolerance
from .model import FourCentreOval, validate_oval
from .render import RenderStyle, render_encompassing, render_oval
from .serialize import dumps

EXIT_OK, EXIT_USAGE, EXIT_GEOMETRY = 0, 1, 2

_DECIMAL = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)$")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def decimal(text: str) -> float:
    """Parse a plain dot-decimal number; no exponents, expressions or locale forms."""
    if not _DECIMAL.match(text.strip()):
        raise argparse.ArgumentTypeError(f"not a plain decimal number: {text!r}")
    return float(text)


def circle_arg(text: str) -> CircleSpec:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected x,y,r, got {text!r}")
    x, y, r = (decimal(p) for p in parts)
    try:
        return CircleSpec(Point(x, y), r)
    except GeometryError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


@dataclass(frozen=True)
class CliConfig:
    tol: Tolerance
    fmt: str
    json_out: Path | None
    svg_out: Path | None
    include_trace: bool
    style: RenderStyle

    @property
    def wants_json(self) -> bool:
        return self.fmt in ("json", "both")

    @property
    def wants_svg(self) -> bool:
        return self.fmt in ("svg", "both")


def _config(args: argparse.Namespace) -> CliConfig:
    if args.format == "both" and args.json_out is None and args.svg_out is None:
        raise UsageError("--format both needs --json-out or --svg-out so the outputs do not mix on stdout")
    try:
        tol = Tolerance(args.abs_eps, args.rel_eps)
        style = RenderStyle(
            stroke_width_main=args.stroke_main,
            stroke_width_aux=args.stroke_aux,
            show_labels=not args.no_labels,
            show_aux=not args.no_aux,
            decimals=args.decimals,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return CliConfig(tol, args.format, args.json_out, args.svg_out, args.trace, style)


def _emit(text: str, path: Path | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        path.write_text(text, encoding="utf-8")


def _emit_oval(oval: FourCentreOval, trace, cfg: CliConfig) -> None:
    if cfg.wants_json:
        payload = oval.to_dict()
        if cfg.include_trace:
            payload["trace"] = trace.to_dict()
        _emit(dumps(payload), cfg.json_out)
    if cfg.wants_svg:
        _emit(render_oval(oval, trace, cfg.style, cfg.tol), cfg.svg_out)


def cmd_oval_b1(args, cfg: CliConfig) -> int:
    _emit_oval(*construct_oval_b1(args.minor, args.major, args.radius_large, cfg.tol), cfg)
    return EXIT_OK


def cmd_oval_b2(args, cfg: CliConfig) -> int:
    _emit_oval(*construct_oval_b2(args.minor, args.major, args.radius_small, cfg.tol), cfg)
    return EXIT_OK


def cmd_family(args, cfg: CliConfig) -> int:
    result = oval_from_major_axis_and_radii(args.major_axis, args.radius_small, args.radius_large, cfg.tol)
    _emit_oval(*result, cfg)
    return EXIT_OK


def cmd_classic(args, cfg: CliConfig) -> int:
    _emit_oval(*construct_classic_oval(args.kind, args.scale, args.half_angle, cfg.tol), cfg)
    return EXIT_OK


_ENCIRCLE = {
    "adjacent": encircle_adjacent,
    "overlapping": encircle_overlapping,
    "separate": encircle_separate_single,
}


def cmd_encircle(args, cfg: CliConfig) -> int:
    if args.case == "family":
        if args.d is None:
            raise UsageError("--case family requires --d")
        result = encircle_separate_family(args.c1, args.c2, args.d, cfg.tol)
    else:
        if args.d is not None:
            raise UsageError("--d only applies to --case family")
        result = _ENCIRCLE[args.case](args.c1, args.c2, cfg.tol)
    if cfg.wants_json:
        _emit(dumps(result.to_dict(include_trace=cfg.include_trace)), cfg.json_out)
    if cfg.wants_svg:
        _emit(render_encompassing(result, (args.c1, args.c2), cfg.style, cfg.tol), cfg.svg_out)
    return EXIT_OK


def cmd_validate(args, cfg: CliConfig) -> int:
    try:
        data = json.loads(Path(args.input).read_text(encoding="utf-8"))
        oval = FourCentreOval.from_dict(data)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        print(f"error: cannot read oval from {args.input}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = validate_oval(oval, cfg.tol)
    _emit(dumps(report.to_dict()), cfg.json_out)
    return EXIT_OK if report.valid else EXIT_GEOMETRY


def _common(formats: Sequence[str]) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("output")
    g.add_argument("--format", choices=formats, default="json")
    g.add_argument("--json-out", type=Path, help="write JSON here instead of stdout")
    g.add_argument("--svg-out", type=Path, help="write SVG here instead of stdout")
    g.add_argument("--trace", action="store_true", help="include the construction trace in JSON")
    t = p.add_argument_group("tolerance")
    t.add_argument("--abs-eps", type=decimal, default=1e-9)
    t.add_argument("--rel-eps", type=decimal, default=1e-9)
    s = p.add_argument_group("style")
    s.add_argument("--stroke-main", type=decimal, default=RenderStyle.stroke_width_main)
    s.add_argument("--stroke-aux", type=decimal, default=RenderStyle.stroke_width_aux)
    s.add_argument("--no-labels", action="store_true")
    s.add_argument("--no-aux", action="store_true")
    s.add_argument("--decimals", type=int, default=RenderStyle.decimals)
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="oval", description="4-centre oval and enclosing-circle constructions.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    common = _common(["json", "svg", "both"])

    p = sub.add_parser("b1", parents=[common], help="oval from both semiaxes and the large radius")
    p.add_argument("--minor", type=decimal, required=True)
    p.add_argument("--major", type=decimal, required=True)
    p.add_argument("--radius-large", type=decimal, required=True)
    p.set_defaults(func=cmd_oval_b1)

    p = sub.add_parser("b2", parents=[common], help="oval from both semiaxes and the small radius")
    p.add_argument("--minor", type=decimal, required=True)
    p.add_argument("--major", type=decimal, required=True)
    p.add_argument("--radius-small", type=decimal, required=True)
    p.set_defaults(func=cmd_oval_b2)

    p = sub.add_parser("family", parents=[common], help="oval from the full major axis and both radii")
    p.add_argument("--major-axis", type=decimal, required=True)
    p.add_argument("--radius-small", type=decimal, required=True)
    p.add_argument("--radius-large", type=decimal, required=True)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("classic", parents=[common], help="fixed-proportion seed ovals")
    p.add_argument("--kind", choices=[k.value for k in ClassicKind], required=True)
    p.add_argument("--scale", type=decimal, default=1.0)
    p.add_argument("--half-angle", type=decimal, help="apex half-angle in radians (Clavius only)")
    p.set_defaults(func=cmd_classic)

    p = sub.add_parser("encircle", parents=[common], help="circle enclosing and touching two circles")
    p.add_argument("--case", choices=["adjacent", "overlapping", "separate", "family"], required=True)
    p.add_argument("--c1", type=circle_arg, required=True, metavar="X,Y,R")
    p.add_argument("--c2", type=circle_arg, required=True, metavar="X,Y,R")
    p.add_argument("--d", type=decimal, help="family parameter (case family)")
    p.set_defaults(func=cmd_encircle)

    p = sub.add_parser("validate", parents=[_common(["json"])], help="check an oval JSON file")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config(args)
        return args.func(args, cfg)
    except UsageError as exc:
        print(f"oval: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GeometryError as exc:
        print(f"oval: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_GEOMETRY
    except OSError as exc:
        print(f"oval: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
