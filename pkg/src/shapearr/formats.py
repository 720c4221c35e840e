"""ShapeFile text format, raw point/line JSON, and JSON report documents.

ShapeFile::

    # a triangle
    seg 0 0 2 0
    seg 0 0 1/2 1
    seg 1/2 1 1 2   # merged with the previous record on load
    seg 2 0 1 2

Coordinates are integers or ``p/q`` rationals. Rationals in JSON output
are always strings, never floats.
"""
from __future__ import annotations

import json
import logging
import re
from fractions import Fraction
from pathlib import Path
from typing import Any, Iterable, Optional, Union

from .arrangement import AxiomReport, RawPointLineSet, validate
from .determinacy import DeterminacyVerdict
from .incidence import GeometryClass, LabeledIncidence
from .kernel import DegenerateSegmentError, GeometryError, LineEq, Point2, Segment, canonical_line
from .shape import Shape, reduce

log = logging.getLogger(__name__)

_RATIONAL = re.compile(r"[+-]?\d+(?:/\d+)?\Z")


class ShapeFileError(ValueError):
    def __init__(self, message: str, lineno: Optional[int] = None):
        super().__init__(f"line {lineno}: {message}" if lineno is not None else message)
        self.lineno = lineno


class DegenerateRecordError(ShapeFileError, DegenerateSegmentError):
    pass


def parse_rational(token: str) -> Fraction:
    token = str(token).strip()
    if not _RATIONAL.match(token):
        raise ValueError(f"not an integer or p/q rational: {token!r}")
    try:
        return Fraction(token)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator: {token!r}") from None


def format_rational(value: Fraction) -> str:
    return str(value)


def parse_shape(source: Union[str, Path, Iterable[str]]) -> Shape:
    """Parse ShapeFile text (a path, a string of text, or an iterable of lines).

    Input segments need not be maximal; each merge is logged at INFO level.
    """
    if isinstance(source, Path):
        lines: Iterable[str] = source.read_text().splitlines()
    elif isinstance(source, str):
        lines = source.splitlines()
    else:
        lines = source

    raw: list[Segment] = []
    for lineno, text in enumerate(lines, start=1):
        body = text.split("#", 1)[0].strip()
        if not body:
            continue
        fields = body.split()
        if fields[0] != "seg" or len(fields) != 5:
            raise ShapeFileError(f"expected 'seg x1 y1 x2 y2', got {body!r}", lineno)
        try:
            x1, y1, x2, y2 = (parse_rational(f) for f in fields[1:])
        except ValueError as exc:
            raise ShapeFileError(str(exc), lineno) from None
        try:
            raw.append(Segment(Point2(x1, y1), Point2(x2, y2)))
        except DegenerateSegmentError:
            raise DegenerateRecordError("zero-length segment", lineno) from None

    shape = reduce(raw)
    if len(shape) != len(raw):
        log.info("reduced %d input segments to %d maximal segments", len(raw), len(shape))
    return shape


def load_shape(path: Union[str, Path]) -> Shape:
    return parse_shape(Path(path))


def serialize_shape(shape: Shape) -> str:
    return "".join(
        f"seg {s.p1.x} {s.p1.y} {s.p2.x} {s.p2.y}\n" for s in shape.segments
    )


def parse_raw_set(doc: Union[str, dict]) -> RawPointLineSet:
    """Read ``{"points": [[x, y], ...], "lines": [[a, b, c], ...]}``.

    Line triples may be any rational multiple of the line; they are
    canonicalized on the way in.
    """
    if isinstance(doc, str):
        doc = json.loads(doc)
    if not isinstance(doc, dict):
        raise ValueError("point/line document must be a JSON object")
    unknown = set(doc) - {"points", "lines"}
    if unknown:
        raise ValueError(f"unknown keys: {sorted(unknown)}")
    try:
        points = [Point2(parse_rational(x), parse_rational(y)) for x, y in doc.get("points", [])]
        lines = [
            canonical_line(*(parse_rational(v) for v in triple)) for triple in doc.get("lines", [])
        ]
    except (TypeError, ValueError) as exc:
        if isinstance(exc, GeometryError):
            raise
        raise ValueError(f"malformed point/line document: {exc}") from None
    return RawPointLineSet(frozenset(points), frozenset(lines))


def point_json(p: Point2) -> list[str]:
    return [format_rational(p.x), format_rational(p.y)]


def line_json(line: LineEq) -> list[int]:
    return list(line.as_tuple())


def shape_json(shape: Shape) -> dict[str, Any]:
    return {
        "segment_count": len(shape),
        "segments": [[point_json(s.p1), point_json(s.p2)] for s in shape.segments],
    }


def arrangement_json(arrangement: RawPointLineSet) -> dict[str, Any]:
    return {
        "line_count": len(arrangement.lines),
        "point_count": len(arrangement.points),
        "lines": [line_json(line) for line in arrangement.sorted_lines],
        "points": [point_json(p) for p in arrangement.sorted_points],
    }


def axiom_report_json(report: AxiomReport) -> dict[str, Any]:
    return {
        "valid": report.valid,
        "violations_rule1": [point_json(p) for p in sorted(report.violations_rule1)],
        "violations_rule2": [
            [line_json(l1), line_json(l2)] for l1, l2 in sorted(report.violations_rule2)
        ],
    }


def raw_set_json(raw: RawPointLineSet) -> dict[str, Any]:
    out = arrangement_json(raw)
    out["axiom_report"] = axiom_report_json(validate(raw))
    return out


def incidence_json(labeled: LabeledIncidence) -> dict[str, Any]:
    inc = labeled.structure
    return {
        "points": [{"label": p, "at": point_json(labeled.point_coords[p])} for p in inc.points],
        "lines": [{"label": l, "equation": line_json(labeled.line_eqs[l])} for l in inc.lines],
        "flags": [list(f) for f in inc.sorted_flags()],
    }


def geometry_class_json(cls: GeometryClass) -> str:
    return cls.value


def verdict_json(verdict: DeterminacyVerdict) -> dict[str, Any]:
    return {
        "determinate": verdict.determinate,
        "reason": verdict.reason.value,
        "mark_count": verdict.mark_count,
    }


def dump_report(report: dict[str, Any]) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"
