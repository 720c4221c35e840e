"""Whether a shape A gives a determinate rule A -> B.

``classify_rule`` works on the arrangement of A: a point-line geometry is
determinate outright; otherwise two or more registration marks suffice.
``oracle_determinate_by_triples`` decides the same question directly from
segment triples and shares no code with the arrangement path beyond the
kernel predicates.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from .arrangement import arrangement_of
from .incidence import incidence_of, is_point_line_geometry
from .kernel import intersect, is_parallel, point_on_line
from .shape import Shape


class Reason(enum.Enum):
    GeometryArrangement = "GeometryArrangement"
    TwoOrMoreMarks = "TwoOrMoreMarks"
    FewerThanTwoMarks = "FewerThanTwoMarks"
    EmptyArrangement = "EmptyArrangement"


@dataclass(frozen=True)
class DeterminacyVerdict:
    determinate: bool
    reason: Reason
    mark_count: int


def classify_rule(a: Shape) -> DeterminacyVerdict:
    arrangement = arrangement_of(a)
    marks = len(arrangement.points)
    if not arrangement.lines:
        # vacuously a geometry, but there is nothing to match
        return DeterminacyVerdict(False, Reason.EmptyArrangement, 0)
    if is_point_line_geometry(incidence_of(arrangement)):
        return DeterminacyVerdict(True, Reason.GeometryArrangement, marks)
    if marks >= 2:
        return DeterminacyVerdict(True, Reason.TwoOrMoreMarks, marks)
    return DeterminacyVerdict(False, Reason.FewerThanTwoMarks, marks)


def oracle_determinate_by_triples(a: Shape) -> bool:
    """Brute force: does some triple of segments witness determinacy?

    A triple qualifies when its carriers are pairwise distinct, not all
    parallel to one another, and not all through one common point.
    """
    for s1, s2, s3 in combinations(a.segments, 3):
        l1, l2, l3 = s1.carrier, s2.carrier, s3.carrier
        if len({l1, l2, l3}) < 3:
            continue
        if is_parallel(l1, l2) and is_parallel(l2, l3):
            continue
        # some pair meets; concurrent iff that meet lies on the remaining line
        for x, y, z in ((l1, l2, l3), (l1, l3, l2), (l2, l3, l1)):
            q = intersect(x, y)
            if q is not None:
                break
        if not point_on_line(q, z):
            return True
    return False
