"""Shapes as finite sets of maximal segments, and their algebra.

A :class:`Shape` never holds two collinear segments that touch or overlap.
:func:`reduce` is the only way raw segment lists become shapes; the sum,
difference and product all work per carrier line on 1-D intervals.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .kernel import (
    GeometryError,
    LineEq,
    Point2,
    RationalLike,
    Segment,
    as_rational,
    line_parameter,
    point_at,
    point_on_line,
    segment_interval,
)

Interval = tuple[Fraction, Fraction]


class NotMaximalError(GeometryError):
    """Segments handed to :class:`Shape` contain a co-related pair."""


class InvalidTransformError(GeometryError):
    pass


def _by_carrier(segments: Iterable[Segment]) -> dict[LineEq, list[Interval]]:
    groups: dict[LineEq, list[Interval]] = defaultdict(list)
    for s in segments:
        groups[s.carrier].append(segment_interval(s))
    return groups


def _merge(intervals: Iterable[Interval]) -> list[Interval]:
    merged: list[Interval] = []
    for lo, hi in sorted(intervals):
        if merged and lo <= merged[-1][1]:
            if hi > merged[-1][1]:
                merged[-1] = (merged[-1][0], hi)
        else:
            merged.append((lo, hi))
    return merged


def _subtract(intervals: list[Interval], holes: list[Interval]) -> list[Interval]:
    # both inputs merged and sorted
    out: list[Interval] = []
    for lo, hi in intervals:
        cur = lo
        for hlo, hhi in holes:
            if hhi <= cur or hlo >= hi:
                continue
            if hlo > cur:
                out.append((cur, hlo))
            cur = max(cur, hhi)
            if cur >= hi:
                break
        if cur < hi:
            out.append((cur, hi))
    return out


def _overlap(left: list[Interval], right: list[Interval]) -> list[Interval]:
    out: list[Interval] = []
    i = j = 0
    while i < len(left) and j < len(right):
        lo = max(left[i][0], right[j][0])
        hi = min(left[i][1], right[j][1])
        if lo < hi:
            out.append((lo, hi))
        if left[i][1] < right[j][1]:
            i += 1
        else:
            j += 1
    return out


def _segments_from(groups: dict[LineEq, list[Interval]]) -> list[Segment]:
    return [
        Segment(point_at(line, lo), point_at(line, hi))
        for line, intervals in groups.items()
        for lo, hi in intervals
    ]


@dataclass(frozen=True, slots=True)
class Shape:
    """A finite set of maximal segments, kept as a sorted tuple."""

    segments: tuple[Segment, ...] = ()

    def __post_init__(self) -> None:
        segs = tuple(sorted(set(self.segments)))
        for line, intervals in _by_carrier(segs).items():
            intervals.sort()
            for (_, hi), (lo, _) in zip(intervals, intervals[1:]):
                if lo <= hi:
                    raise NotMaximalError(f"co-related segments on carrier {line!r}")
        object.__setattr__(self, "segments", segs)

    def __iter__(self) -> Iterator[Segment]:
        return iter(self.segments)

    def __len__(self) -> int:
        return len(self.segments)

    def __bool__(self) -> bool:
        return bool(self.segments)

    def __add__(self, other: "Shape") -> "Shape":
        return sum_(self, other)

    def __sub__(self, other: "Shape") -> "Shape":
        return difference(self, other)

    def __mul__(self, other: "Shape") -> "Shape":
        return product(self, other)

    @property
    def carriers(self) -> frozenset[LineEq]:
        return frozenset(s.carrier for s in self.segments)

    def covers(self, p: Point2) -> bool:
        """Whether ``p`` lies on some segment of the shape."""
        for s in self.segments:
            line = s.carrier
            if point_on_line(p, line):
                lo, hi = segment_interval(s)
                if lo <= line_parameter(p, line) <= hi:
                    return True
        return False


EMPTY_SHAPE = Shape()


def reduce(raw: Iterable[Segment]) -> Shape:
    """Merge touching or overlapping collinear segments into maximal ones."""
    groups = _by_carrier(raw)
    return Shape(tuple(_segments_from({line: _merge(iv) for line, iv in groups.items()})))


def shape_of(*coords: tuple[RationalLike, RationalLike, RationalLike, RationalLike]) -> Shape:
    """``shape_of((0, 0, 1, 0), (1, 0, 1, 1))`` builds and reduces a shape."""
    return reduce(Segment.of(*c) for c in coords)


def sum_(s1: Shape, s2: Shape) -> Shape:
    return reduce(s1.segments + s2.segments)


def difference(s1: Shape, s2: Shape) -> Shape:
    left = _by_carrier(s1)
    right = _by_carrier(s2)
    out = {}
    for line, intervals in left.items():
        mine = _merge(intervals)
        out[line] = _subtract(mine, _merge(right[line])) if line in right else mine
    return Shape(tuple(_segments_from(out)))


def product(s1: Shape, s2: Shape) -> Shape:
    left = _by_carrier(s1)
    right = _by_carrier(s2)
    out = {
        line: _overlap(_merge(intervals), _merge(right[line]))
        for line, intervals in left.items()
        if line in right
    }
    return Shape(tuple(_segments_from(out)))


def shapes_equal(s1: Shape, s2: Shape) -> bool:
    return s1.segments == s2.segments


@dataclass(frozen=True, slots=True)
class AffineMap:
    """Similarity ``p -> M p + t`` with rational entries.

    ``M`` must be a nonzero multiple of a rotation or of a reflection, which
    covers translation, rotation, axis reflection and uniform scale.
    """

    m11: Fraction = Fraction(1)
    m12: Fraction = Fraction(0)
    m21: Fraction = Fraction(0)
    m22: Fraction = Fraction(1)
    tx: Fraction = Fraction(0)
    ty: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        for name in ("m11", "m12", "m21", "m22", "tx", "ty"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if self.m11 * self.m22 - self.m12 * self.m21 == 0:
            raise InvalidTransformError("map is not invertible")
        rotation_like = self.m11 == self.m22 and self.m12 == -self.m21
        reflection_like = self.m11 == -self.m22 and self.m12 == self.m21
        if not (rotation_like or reflection_like):
            raise InvalidTransformError("map is not a similarity")

    @classmethod
    def identity(cls) -> "AffineMap":
        return cls()

    @classmethod
    def translation(cls, dx: RationalLike, dy: RationalLike) -> "AffineMap":
        return cls(tx=dx, ty=dy)

    @classmethod
    def scaling(cls, k: RationalLike) -> "AffineMap":
        return cls(m11=k, m22=k)

    @classmethod
    def rotation(cls, cos: RationalLike, sin: RationalLike) -> "AffineMap":
        """Counter-clockwise rotation about the origin; needs cos² + sin² = 1."""
        c, s = as_rational(cos), as_rational(sin)
        if c * c + s * s != 1:
            raise InvalidTransformError(f"({c}, {s}) is not a rational point on the unit circle")
        return cls(m11=c, m12=-s, m21=s, m22=c)

    @classmethod
    def reflection(cls, cos: RationalLike = 1, sin: RationalLike = 0) -> "AffineMap":
        """Reflection with matrix ``[[cos, sin], [sin, -cos]]``.

        ``reflection()`` mirrors across the x-axis and ``reflection(-1, 0)``
        across the y-axis. In general the mirror axis makes half the angle
        of (cos, sin) with the x-axis.
        """
        c, s = as_rational(cos), as_rational(sin)
        if c * c + s * s != 1:
            raise InvalidTransformError(f"({c}, {s}) is not a rational point on the unit circle")
        return cls(m11=c, m12=s, m21=s, m22=-c)

    def then(self, other: "AffineMap") -> "AffineMap":
        """The map that applies ``self`` first and ``other`` second."""
        return AffineMap(
            m11=other.m11 * self.m11 + other.m12 * self.m21,
            m12=other.m11 * self.m12 + other.m12 * self.m22,
            m21=other.m21 * self.m11 + other.m22 * self.m21,
            m22=other.m21 * self.m12 + other.m22 * self.m22,
            tx=other.m11 * self.tx + other.m12 * self.ty + other.tx,
            ty=other.m21 * self.tx + other.m22 * self.ty + other.ty,
        )

    def __call__(self, p: Point2) -> Point2:
        return Point2(
            self.m11 * p.x + self.m12 * p.y + self.tx,
            self.m21 * p.x + self.m22 * p.y + self.ty,
        )


def transform(shape: Shape, t: AffineMap) -> Shape:
    if not isinstance(t, AffineMap):
        raise InvalidTransformError(f"expected an AffineMap, got {type(t).__name__}")
    return reduce(Segment(t(s.p1), t(s.p2)) for s in shape.segments)
