"""Command-line interface: ``shapearr <command> FILE [FILE]``.

JSON reports go to stdout (SVG or DOT for ``render`` and ``levi``);
diagnostics go to stderr. Exit status is 0 on success, 1 on bad input or
usage, 2 on an internal error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Optional, Sequence

from . import formats
from .arrangement import (
    arrangement_of,
    naive_difference,
    naive_intersection,
    naive_union,
    validate,
)
from .determinacy import classify_rule
from .incidence import (
    Check,
    classify,
    is_linear_space,
    is_near_linear,
    is_point_line_geometry,
    labeled_incidence_of,
)
from .render import emit_dot, render_svg
from .shape import Shape, difference, product, sum_

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2

BINARY_OPS: dict[str, tuple[Callable[[Shape, Shape], Shape], Callable]] = {
    "sum": (sum_, naive_union),
    "diff": (difference, naive_difference),
    "product": (product, naive_intersection),
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit 2
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="shapearr", description="Shapes, arrangements and finite geometries.")
    parser.add_argument("-q", "--quiet", action="store_true", help="suppress reduction diagnostics")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, helptext in [
        ("reduce", "reduce a shape file to maximal segments"),
        ("arrangement", "construction lines and registration marks"),
        ("incidence", "labeled incidence structure of the arrangement"),
        ("classify", "near-linear / linear space classification"),
        ("determinate", "decide whether the shape gives a determinate rule"),
        ("levi", "Levi graph of the incidence structure as DOT"),
    ]:
        cmd = sub.add_parser(name, help=helptext)
        cmd.add_argument("shape", type=Path)

    for name in BINARY_OPS:
        cmd = sub.add_parser(name, help=f"shape {name} and the arrangement of the result")
        cmd.add_argument("first", type=Path)
        cmd.add_argument("second", type=Path)
        cmd.add_argument("--naive", action="store_true", help="also report the set-wise arrangement operation")

    cmd = sub.add_parser("validate", help="check a raw point/line JSON document against the axioms")
    cmd.add_argument("raw", type=Path)

    cmd = sub.add_parser("render", help="draw the shape and its arrangement as SVG")
    cmd.add_argument("shape", type=Path)
    cmd.add_argument("-o", "--output", type=Path, help="write SVG here instead of stdout")
    return parser


def _check_json(check: Check) -> dict[str, Any]:
    out: dict[str, Any] = {"holds": check.holds}
    if not check.holds:
        out["rule"] = check.rule
        out["witness"] = check.witness
    return out


def _shape_report(shape: Shape, depth: str) -> dict[str, Any]:
    report: dict[str, Any] = {"shape": formats.shape_json(shape)}
    if depth == "reduce":
        return report
    arrangement = arrangement_of(shape)
    report["arrangement"] = formats.arrangement_json(arrangement)
    if depth == "arrangement":
        return report
    labeled = labeled_incidence_of(arrangement)
    report["incidence"] = formats.incidence_json(labeled)
    if depth == "incidence":
        return report
    inc = labeled.structure
    report["geometry_class"] = formats.geometry_class_json(classify(inc))
    report["checks"] = {
        "point_line_geometry": _check_json(is_point_line_geometry(inc)),
        "near_linear_space": _check_json(is_near_linear(inc)),
        "linear_space": _check_json(is_linear_space(inc)),
    }
    if depth == "classify":
        return report
    report["determinacy"] = formats.verdict_json(classify_rule(shape))
    return report


def run(args: argparse.Namespace, out) -> None:
    cmd = args.command
    if cmd in ("reduce", "arrangement", "incidence", "classify", "determinate"):
        shape = formats.load_shape(args.shape)
        out.write(formats.dump_report(_shape_report(shape, cmd)))
    elif cmd in BINARY_OPS:
        op, naive = BINARY_OPS[cmd]
        s1, s2 = formats.load_shape(args.first), formats.load_shape(args.second)
        result = op(s1, s2)
        arrangement = arrangement_of(result)
        report = {
            "operation": cmd,
            "shape": formats.shape_json(result),
            "arrangement": formats.arrangement_json(arrangement),
            "axiom_report": formats.axiom_report_json(validate(arrangement)),
        }
        if args.naive:
            raw = naive(arrangement_of(s1), arrangement_of(s2))
            report["naive"] = formats.raw_set_json(raw)
            report["naive"]["matches_definitional"] = (
                raw.points == arrangement.points and raw.lines == arrangement.lines
            )
        out.write(formats.dump_report(report))
    elif cmd == "validate":
        raw = formats.parse_raw_set(args.raw.read_text())
        out.write(formats.dump_report({"axiom_report": formats.axiom_report_json(validate(raw)),
                                       "input": formats.arrangement_json(raw)}))
    elif cmd == "render":
        shape = formats.load_shape(args.shape)
        svg = render_svg(shape, arrangement_of(shape))
        if args.output:
            args.output.write_text(svg)
        else:
            out.write(svg)
    elif cmd == "levi":
        shape = formats.load_shape(args.shape)
        out.write(emit_dot(labeled_incidence_of(arrangement_of(shape)).structure))
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown command {cmd!r}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_INPUT
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_INPUT

    logging.basicConfig(
        level=logging.WARNING if args.quiet else logging.INFO,
        format="shapearr: %(message)s",
        stream=sys.stderr,
    )
    try:
        run(args, sys.stdout)
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"shapearr: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # noqa: BLE001
        print(f"shapearr: internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


cli_main = main


if __name__ == "__main__":
    sys.exit(main())
