"""SVG drawings of shapes with their arrangements, and Graphviz DOT export."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .arrangement import RawPointLineSet
from .incidence import IncidenceStructure
from .kernel import LineEq, Point2
from .shape import Shape

Box = tuple[Fraction, Fraction, Fraction, Fraction]


@dataclass(frozen=True)
class SvgOptions:
    size: int = 400  # pixels along the longer side of the content box
    padding: Fraction = Fraction(1, 10)
    segment_width: float = 2.0
    line_width: float = 1.0
    mark_radius: float = 4.0
    dash: str = "6 4"


def _bounding_box(shape: Shape, arrangement: RawPointLineSet, padding: Fraction) -> Optional[Box]:
    pts = [p for s in shape.segments for p in (s.p1, s.p2)] + list(arrangement.points)
    if not pts:
        return None
    xmin = min(p.x for p in pts)
    xmax = max(p.x for p in pts)
    ymin = min(p.y for p in pts)
    ymax = max(p.y for p in pts)
    pad = max(xmax - xmin, ymax - ymin) * padding
    if pad == 0:
        pad = Fraction(1)
    return xmin - pad, ymin - pad, xmax + pad, ymax + pad


def clip_line(line: LineEq, box: Box) -> Optional[tuple[Point2, Point2]]:
    """The chord of ``line`` inside the closed box, exact."""
    xmin, ymin, xmax, ymax = box
    a, b, c = line.as_tuple()
    hits = set()
    if b != 0:
        for x in (xmin, xmax):
            y = -(a * x + c) / Fraction(b)
            if ymin <= y <= ymax:
                hits.add(Point2(x, y))
    if a != 0:
        for y in (ymin, ymax):
            x = -(b * y + c) / Fraction(a)
            if xmin <= x <= xmax:
                hits.add(Point2(x, y))
    if len(hits) < 2:
        return None
    ordered = sorted(hits)
    return ordered[0], ordered[-1]


def _num(v: float) -> str:
    text = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


def render_svg(shape: Shape, arrangement: RawPointLineSet, options: SvgOptions = SvgOptions()) -> str:
    """Segments solid, construction lines dashed and clipped, marks as dots."""
    head = '<?xml version="1.0" encoding="UTF-8"?>\n'
    box = _bounding_box(shape, arrangement, options.padding)
    if box is None:
        return head + (
            '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            'width="1" height="1" viewBox="0 0 1 1"></svg>\n'
        )
    xmin, ymin, xmax, ymax = box
    scale = options.size / float(max(xmax - xmin, ymax - ymin))
    width = float(xmax - xmin) * scale
    height = float(ymax - ymin) * scale

    def xy(p: Point2) -> tuple[str, str]:
        # SVG y grows downward
        return _num(float(p.x - xmin) * scale), _num(float(ymax - p.y) * scale)

    body = []
    body.append('  <g id="construction-lines" stroke="#888" fill="none">')
    for line in arrangement.sorted_lines:
        chord = clip_line(line, box)
        if chord is None:
            continue
        (x1, y1), (x2, y2) = xy(chord[0]), xy(chord[1])
        body.append(
            f'    <line class="construction" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
            f'stroke-width="{_num(options.line_width)}" stroke-dasharray="{options.dash}"/>'
        )
    body.append("  </g>")
    body.append('  <g id="segments" stroke="#000" fill="none" stroke-linecap="round">')
    for s in shape.segments:
        (x1, y1), (x2, y2) = xy(s.p1), xy(s.p2)
        body.append(
            f'    <line class="segment" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
            f'stroke-width="{_num(options.segment_width)}"/>'
        )
    body.append("  </g>")
    body.append('  <g id="registration-marks" fill="#c00">')
    for p in arrangement.sorted_points:
        cx, cy = xy(p)
        body.append(f'    <circle class="mark" cx="{cx}" cy="{cy}" r="{_num(options.mark_radius)}"/>')
    body.append("  </g>")

    w, h = _num(width), _num(height)
    return (
        head
        + f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">\n'
        + "\n".join(body)
        + "\n</svg>\n"
    )


def emit_dot(inc: IncidenceStructure, name: str = "levi") -> str:
    """Levi graph of ``inc`` as an undirected DOT graph."""
    out = [f"graph {name} {{"]
    for p in inc.points:
        out.append(f'  p_{p} [shape=circle, label="{p}"];')
    for line in inc.lines:
        out.append(f'  L_{line} [shape=box, label="{line}"];')
    for p, line in inc.sorted_flags():
        out.append(f"  p_{p} -- L_{line};")
    out.append("}")
    return "\n".join(out) + "\n"
