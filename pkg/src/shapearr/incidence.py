"""Labeled incidence structures and finite-geometry classification.

The checks below never look at coordinates. They see only labels and
flags, so a structure built by hand behaves exactly like one extracted
from an arrangement.
"""
from __future__ import annotations

import enum
import string
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Iterable, Optional

from .arrangement import RawPointLineSet
from .kernel import LineEq, Point2, point_on_line

Flag = tuple[str, str]

_POINT_ALPHABET = string.ascii_lowercase[15:] + string.ascii_lowercase[:15]  # p, q, r, ...
_LINE_ALPHABET = string.ascii_uppercase


def _bijective(n: int, alphabet: str) -> str:
    k = len(alphabet)
    out = ""
    n += 1
    while n:
        n, r = divmod(n - 1, k)
        out = alphabet[r] + out
    return out


def point_labels(n: int) -> list[str]:
    """``p, q, ..., z, a, ..., o, pp, pq, ...``"""
    return [_bijective(i, _POINT_ALPHABET) for i in range(n)]


def line_labels(n: int) -> list[str]:
    """``A, B, ..., Z, AA, AB, ...``"""
    return [_bijective(i, _LINE_ALPHABET) for i in range(n)]


class IncidenceError(ValueError):
    pass


@dataclass(frozen=True)
class IncidenceStructure:
    points: tuple[str, ...] = ()
    lines: tuple[str, ...] = ()
    flags: frozenset[Flag] = frozenset()

    def __post_init__(self) -> None:
        points, lines = tuple(self.points), tuple(self.lines)
        flags = list(self.flags)
        if len(set(points)) != len(points) or len(set(lines)) != len(lines):
            raise IncidenceError("duplicate labels")
        if set(points) & set(lines):
            raise IncidenceError("point and line labels must be disjoint")
        if len(set(flags)) != len(flags):
            raise IncidenceError("duplicate flags")
        pset, lset = set(points), set(lines)
        for p, line in flags:
            if p not in pset or line not in lset:
                raise IncidenceError(f"flag {(p, line)} is not in points x lines")
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "lines", lines)
        object.__setattr__(self, "flags", frozenset(flags))

    @classmethod
    def from_blocks(cls, blocks: dict[str, Iterable[str]], points: Optional[Iterable[str]] = None) -> "IncidenceStructure":
        """Build a structure from ``{line_label: point_labels}``."""
        flags = {(p, line) for line, pts in blocks.items() for p in pts}
        if points is None:
            points = sorted({p for p, _ in flags})
        return cls(tuple(points), tuple(blocks), frozenset(flags))

    def points_on(self, line: str) -> frozenset[str]:
        return frozenset(p for p, l in self.flags if l == line)

    def lines_through(self, p: str) -> frozenset[str]:
        return frozenset(l for q, l in self.flags if q == p)

    def sorted_flags(self) -> list[Flag]:
        prank = {p: i for i, p in enumerate(self.points)}
        lrank = {l: i for i, l in enumerate(self.lines)}
        return sorted(self.flags, key=lambda f: (prank[f[0]], lrank[f[1]]))


@dataclass(frozen=True)
class LabeledIncidence:
    """An incidence structure together with the geometry its labels name."""

    structure: IncidenceStructure
    point_coords: dict[str, Point2] = field(default_factory=dict)
    line_eqs: dict[str, LineEq] = field(default_factory=dict)


def labeled_incidence_of(arrangement: RawPointLineSet) -> LabeledIncidence:
    pts = arrangement.sorted_points
    lns = arrangement.sorted_lines
    plabels = point_labels(len(pts))
    llabels = line_labels(len(lns))
    flags = frozenset(
        (pl, ll)
        for pl, p in zip(plabels, pts)
        for ll, line in zip(llabels, lns)
        if point_on_line(p, line)
    )
    return LabeledIncidence(
        IncidenceStructure(tuple(plabels), tuple(llabels), flags),
        dict(zip(plabels, pts)),
        dict(zip(llabels, lns)),
    )


def incidence_of(arrangement: RawPointLineSet) -> IncidenceStructure:
    """Label marks in coordinate order and lines in equation order."""
    return labeled_incidence_of(arrangement).structure


@dataclass(frozen=True)
class Check:
    """Truth value of a geometry axiom plus a witness when it fails."""

    holds: bool
    rule: Optional[str] = None
    witness: Any = None

    def __bool__(self) -> bool:
        return self.holds


def is_point_line_geometry(inc: IncidenceStructure) -> Check:
    blocks = {line: inc.points_on(line) for line in inc.lines}
    for line in inc.lines:
        if len(blocks[line]) < 2:
            return Check(False, "every line has two points", line)
    for l1, l2 in combinations(inc.lines, 2):
        if blocks[l1] == blocks[l2]:
            return Check(False, "distinct lines have distinct points", (l1, l2))
    return Check(True)


def _shared_lines(inc: IncidenceStructure) -> dict[tuple[str, str], list[str]]:
    shared: dict[tuple[str, str], list[str]] = {pair: [] for pair in combinations(inc.points, 2)}
    for line in inc.lines:
        on = [p for p in inc.points if (p, line) in inc.flags]
        for pair in combinations(on, 2):
            shared[pair].append(line)
    return shared


def is_near_linear(inc: IncidenceStructure) -> Check:
    geometry = is_point_line_geometry(inc)
    if not geometry:
        return geometry
    for pair, lines in _shared_lines(inc).items():
        if len(lines) > 1:
            return Check(False, "two points share at most one line", (pair, tuple(lines[:2])))
    return Check(True)


def is_linear_space(inc: IncidenceStructure) -> Check:
    near = is_near_linear(inc)
    if not near:
        return near
    for pair, lines in _shared_lines(inc).items():
        if not lines:
            return Check(False, "two points share exactly one line", pair)
    blocks = [inc.points_on(line) for line in inc.lines]
    for triple in combinations(inc.points, 3):
        if not any(set(triple) <= b for b in blocks):
            return Check(True)
    # near-linear with every triple collinear: one line carries all points
    full = [line for line in inc.lines if set(inc.points) <= inc.points_on(line)]
    return Check(False, "three non-collinear points exist", full[0] if full else inc.points)


class GeometryClass(enum.Enum):
    NotAGeometry = "NotAGeometry"
    NearLinearSpace = "NearLinearSpace"
    LinearSpace = "LinearSpace"


def classify(inc: IncidenceStructure) -> GeometryClass:
    if is_linear_space(inc):
        return GeometryClass.LinearSpace
    if is_near_linear(inc):
        return GeometryClass.NearLinearSpace
    return GeometryClass.NotAGeometry


@dataclass(frozen=True)
class LeviGraph:
    point_nodes: tuple[str, ...]
    line_nodes: tuple[str, ...]
    edges: tuple[Flag, ...]

    def degree(self, node: str) -> int:
        return sum(node in e for e in self.edges)


def levi_graph(inc: IncidenceStructure) -> LeviGraph:
    """Bipartite point/line graph with one edge per flag."""
    return LeviGraph(inc.points, inc.lines, tuple(inc.sorted_flags()))
