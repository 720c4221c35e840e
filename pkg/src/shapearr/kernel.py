"""Exact planar kernel: rational points, canonical lines, segments.

Every predicate here is decided with :class:`fractions.Fraction` and plain
Python integers, so there are no tolerances anywhere downstream.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

Rational = Fraction
RationalLike = Union[int, str, Fraction]


class GeometryError(ValueError):
    """Base class for invalid geometric input."""


class InvalidLineError(GeometryError):
    pass


class DegenerateSegmentError(GeometryError):
    pass


class IdenticalLinesError(GeometryError):
    pass


def as_rational(value: RationalLike) -> Fraction:
    if isinstance(value, float):
        raise TypeError("floating point coordinates are not accepted; use int, 'p/q' or Fraction")
    return Fraction(value)


@dataclass(frozen=True, order=True, slots=True)
class Point2:
    x: Fraction
    y: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", as_rational(self.x))
        object.__setattr__(self, "y", as_rational(self.y))

    def __repr__(self) -> str:
        return f"Point2({self.x}, {self.y})"


def point(x: RationalLike, y: RationalLike) -> Point2:
    return Point2(x, y)


@dataclass(frozen=True, order=True, slots=True)
class LineEq:
    """The line ``a*x + b*y + c = 0`` with a canonical integer triple.

    Construct through :func:`canonical_line` or :func:`line_through`; the
    constructor only checks that the triple is already canonical.
    """

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        a, b, c = self.a, self.b, self.c
        if not all(isinstance(v, int) for v in (a, b, c)):
            raise InvalidLineError(f"line coefficients must be integers: {(a, b, c)!r}")
        if a == 0 and b == 0:
            raise InvalidLineError("a and b cannot both be zero")
        if math.gcd(a, b, c) != 1:
            raise InvalidLineError(f"line {(a, b, c)} is not gcd-reduced")
        if not (a > 0 or (a == 0 and b > 0)):
            raise InvalidLineError(f"line {(a, b, c)} is not sign-normalized")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    @property
    def is_vertical(self) -> bool:
        return self.b == 0

    def __repr__(self) -> str:
        return f"LineEq({self.a}, {self.b}, {self.c})"


@dataclass(frozen=True, order=True, slots=True)
class Segment:
    """Closed segment with endpoints stored in lexicographic order."""

    p1: Point2
    p2: Point2

    def __post_init__(self) -> None:
        if self.p1 == self.p2:
            raise DegenerateSegmentError(f"zero-length segment at {self.p1}")
        if self.p2 < self.p1:
            p1, p2 = self.p2, self.p1
            object.__setattr__(self, "p1", p1)
            object.__setattr__(self, "p2", p2)

    @classmethod
    def of(cls, x1: RationalLike, y1: RationalLike, x2: RationalLike, y2: RationalLike) -> "Segment":
        return cls(Point2(x1, y1), Point2(x2, y2))

    @property
    def carrier(self) -> LineEq:
        return line_through(self.p1, self.p2)

    def __repr__(self) -> str:
        return f"Segment(({self.p1.x}, {self.p1.y}), ({self.p2.x}, {self.p2.y}))"


class CoClass(enum.Enum):
    DistinctCarriers = "DistinctCarriers"
    CollinearDisjoint = "CollinearDisjoint"
    AdjacentCollinear = "AdjacentCollinear"
    OverlappingCollinear = "OverlappingCollinear"

    @property
    def is_co(self) -> bool:
        return self in (CoClass.AdjacentCollinear, CoClass.OverlappingCollinear)


def canonical_line(a_raw: RationalLike, b_raw: RationalLike, c_raw: RationalLike) -> LineEq:
    a, b, c = (as_rational(v) for v in (a_raw, b_raw, c_raw))
    if a == 0 and b == 0:
        raise InvalidLineError("degenerate line: a = b = 0")
    scale = math.lcm(a.denominator, b.denominator, c.denominator)
    ia, ib, ic = (int(v * scale) for v in (a, b, c))
    g = math.gcd(ia, ib, ic)
    ia, ib, ic = ia // g, ib // g, ic // g
    if ia < 0 or (ia == 0 and ib < 0):
        ia, ib, ic = -ia, -ib, -ic
    return LineEq(ia, ib, ic)


def line_through(p: Point2, q: Point2) -> LineEq:
    if p == q:
        raise DegenerateSegmentError(f"no unique line through the single point {p}")
    a = q.y - p.y
    b = p.x - q.x
    return canonical_line(a, b, -(a * p.x + b * p.y))


def is_parallel(l1: LineEq, l2: LineEq) -> bool:
    return l1.a * l2.b - l2.a * l1.b == 0


def intersect(l1: LineEq, l2: LineEq) -> Optional[Point2]:
    """Common point of two distinct lines, or ``None`` when they are parallel."""
    if l1 == l2:
        raise IdenticalLinesError(f"{l1!r} intersected with itself")
    det = l1.a * l2.b - l2.a * l1.b
    if det == 0:
        return None
    x = Fraction(l1.b * l2.c - l2.b * l1.c, det)
    y = Fraction(l2.a * l1.c - l1.a * l2.c, det)
    return Point2(x, y)


def point_on_line(p: Point2, line: LineEq) -> bool:
    return line.a * p.x + line.b * p.y + line.c == 0


def line_parameter(p: Point2, line: LineEq) -> Fraction:
    """Position of ``p`` along ``line``: x for non-vertical lines, y otherwise.

    The parameter increases in the same direction as the lexicographic
    order of points on the line.
    """
    return p.y if line.is_vertical else p.x


def point_at(line: LineEq, t: Fraction) -> Point2:
    if line.is_vertical:
        return Point2(Fraction(-line.c, line.a), t)
    return Point2(t, -(line.a * t + line.c) / line.b)


def segment_interval(s: Segment) -> tuple[Fraction, Fraction]:
    line = s.carrier
    return line_parameter(s.p1, line), line_parameter(s.p2, line)


def co_classify(s1: Segment, s2: Segment) -> CoClass:
    line = s1.carrier
    if line != s2.carrier:
        return CoClass.DistinctCarriers
    lo1, hi1 = segment_interval(s1)
    lo2, hi2 = segment_interval(s2)
    overlap = min(hi1, hi2) - max(lo1, lo2)
    if overlap > 0:
        return CoClass.OverlappingCollinear
    if overlap == 0:
        return CoClass.AdjacentCollinear
    return CoClass.CollinearDisjoint
