"""Point-line arrangements of shapes and the two arrangement axioms.

An arrangement is a pair (marks, construction lines). Every mark lies on
at least two of the lines (axiom 1). Every pair of nonparallel lines meets
at one of the marks (axiom 2).

Two families of operations live here. ``arr_union``, ``arr_difference`` and
``arr_intersection`` go through the shape algebra and always give back an
arrangement. The ``naive_*`` versions only combine the point and line sets.
They return a :class:`RawPointLineSet`, since the result need not satisfy
the axioms.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .kernel import GeometryError, LineEq, Point2, intersect, point_on_line
from .shape import Shape, difference, product, sum_

LinePair = tuple[LineEq, LineEq]


class NotAnArrangementError(GeometryError):
    def __init__(self, report: "AxiomReport"):
        super().__init__(
            f"axiom violations: rule 1 at {sorted(report.violations_rule1)}, "
            f"rule 2 for {sorted(report.violations_rule2)}"
        )
        self.report = report


@dataclass(frozen=True)
class RawPointLineSet:
    points: frozenset[Point2] = frozenset()
    lines: frozenset[LineEq] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", frozenset(self.points))
        object.__setattr__(self, "lines", frozenset(self.lines))

    @property
    def sorted_points(self) -> list[Point2]:
        return sorted(self.points)

    @property
    def sorted_lines(self) -> list[LineEq]:
        return sorted(self.lines)


@dataclass(frozen=True)
class Arrangement(RawPointLineSet):
    """A point/line pair that satisfies both axioms; checked on construction."""

    def __post_init__(self) -> None:
        super().__post_init__()
        report = validate(self)
        if not report.valid:
            raise NotAnArrangementError(report)

    @classmethod
    def from_raw(cls, raw: RawPointLineSet) -> "Arrangement":
        return cls(raw.points, raw.lines)

    def raw(self) -> RawPointLineSet:
        return RawPointLineSet(self.points, self.lines)

    def lines_through(self, p: Point2) -> list[LineEq]:
        return [line for line in self.sorted_lines if point_on_line(p, line)]

    def points_on(self, line: LineEq) -> list[Point2]:
        return [p for p in self.sorted_points if point_on_line(p, line)]


@dataclass(frozen=True)
class AxiomReport:
    valid: bool
    violations_rule1: frozenset[Point2] = field(default_factory=frozenset)
    violations_rule2: frozenset[LinePair] = field(default_factory=frozenset)


def _registration_marks(lines: Iterable[LineEq]) -> frozenset[Point2]:
    marks = set()
    for l1, l2 in combinations(sorted(lines), 2):
        q = intersect(l1, l2)
        if q is not None:
            marks.add(q)
    return frozenset(marks)


def validate(raw: RawPointLineSet) -> AxiomReport:
    """Check both axioms exhaustively and report every violation."""
    lines = sorted(raw.lines)
    rule1 = frozenset(
        p for p in raw.points if sum(point_on_line(p, line) for line in lines) < 2
    )
    rule2 = set()
    for l1, l2 in combinations(lines, 2):
        q = intersect(l1, l2)
        if q is not None and q not in raw.points:
            rule2.add((l1, l2))
    return AxiomReport(not rule1 and not rule2, rule1, frozenset(rule2))


def arrangement_of(shape: Shape) -> Arrangement:
    lines = shape.carriers
    return Arrangement(_registration_marks(lines), lines)


EMPTY_ARRANGEMENT = Arrangement()


def arrangement_of_lines(lines: Iterable[LineEq]) -> Arrangement:
    lines = frozenset(lines)
    return Arrangement(_registration_marks(lines), lines)


def arr_union(s1: Shape, s2: Shape) -> Arrangement:
    return arrangement_of(sum_(s1, s2))


def arr_difference(s1: Shape, s2: Shape) -> Arrangement:
    return arrangement_of(difference(s1, s2))


def arr_intersection(s1: Shape, s2: Shape) -> Arrangement:
    return arrangement_of(product(s1, s2))


def naive_union(a1: RawPointLineSet, a2: RawPointLineSet) -> RawPointLineSet:
    return RawPointLineSet(a1.points | a2.points, a1.lines | a2.lines)


def naive_difference(a1: RawPointLineSet, a2: RawPointLineSet) -> RawPointLineSet:
    return RawPointLineSet(a1.points - a2.points, a1.lines - a2.lines)


def naive_intersection(a1: RawPointLineSet, a2: RawPointLineSet) -> RawPointLineSet:
    return RawPointLineSet(a1.points & a2.points, a1.lines & a2.lines)
