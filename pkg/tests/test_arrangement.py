import random
from itertools import combinations

import pytest
from hypothesis import given

from shapearr.arrangement import (
    EMPTY_ARRANGEMENT,
    Arrangement,
    NotAnArrangementError,
    RawPointLineSet,
    arr_difference,
    arr_intersection,
    arr_union,
    arrangement_of,
    arrangement_of_lines,
    naive_difference,
    naive_intersection,
    naive_union,
    validate,
)
from shapearr.formats import parse_raw_set
from shapearr.kernel import LineEq, Point2, canonical_line, line_through
from shapearr.shape import EMPTY_SHAPE, shape_of, sum_

from .strategies import FIXTURES, fixture_shape, general_position_lines, shapes

X_AXIS, Y_AXIS = LineEq(0, 1, 0), LineEq(1, 0, 0)


def P(x, y):
    return Point2(x, y)


def brute_force_marks(shape):
    """Carrier crossings from segment direction vectors, without the kernel's line equations."""
    marks = set()
    for s1, s2 in combinations(shape.segments, 2):
        d1 = (s1.p2.x - s1.p1.x, s1.p2.y - s1.p1.y)
        d2 = (s2.p2.x - s2.p1.x, s2.p2.y - s2.p1.y)
        den = d1[0] * d2[1] - d1[1] * d2[0]
        if den:
            t = ((s2.p1.x - s1.p1.x) * d2[1] - (s2.p1.y - s1.p1.y) * d2[0]) / den
            marks.add(P(s1.p1.x + t * d1[0], s1.p1.y + t * d1[1]))
    return marks


def same(a, b):
    return a.points == b.points and a.lines == b.lines


def test_empty_arrangement():
    a = arrangement_of(EMPTY_SHAPE)
    assert not a.points and not a.lines
    assert a == EMPTY_ARRANGEMENT


def test_triangle_arrangement():
    a = arrangement_of(fixture_shape("triangle"))
    assert {l.as_tuple() for l in a.lines} == {(0, 1, 0), (2, -1, 0), (2, 1, -4)}
    assert a.points == {P(0, 0), P(2, 0), P(1, 2)}
    # each vertex lies on exactly its two carriers
    for (x, y), carriers in {
        (0, 0): [(0, 1, 0), (2, -1, 0)],
        (2, 0): [(0, 1, 0), (2, 1, -4)],
        (1, 2): [(2, -1, 0), (2, 1, -4)],
    }.items():
        for a_, b_, c_ in carriers:
            assert a_ * x + b_ * y + c_ == 0
        assert len(a.lines_through(P(x, y))) == 2


def test_square_arrangement():
    a = arrangement_of(fixture_shape("square"))
    assert {l.as_tuple() for l in a.lines} == {(0, 1, 0), (0, 1, -1), (1, 0, 0), (1, 0, -1)}
    assert a.points == {P(0, 0), P(1, 0), P(0, 1), P(1, 1)}
    assert a.points == brute_force_marks(fixture_shape("square"))


def test_single_segment_arrangement():
    a = arrangement_of(fixture_shape("single_segment"))
    assert len(a.lines) == 1 and not a.points


def test_marks_need_not_lie_on_segments():
    # two disjoint segments whose carriers cross away from both
    a = arrangement_of(shape_of((0, 0, 1, 0), (5, 1, 5, 2)))
    assert a.points == {P(5, 0)}


def test_collinear_gap_segments_share_one_line():
    a = arrangement_of(shape_of((0, 0, 1, 0), (2, 0, 3, 0)))
    assert a.lines == {X_AXIS}


@given(shapes)
def test_arrangement_closure(shape):
    a = arrangement_of(shape)
    assert validate(a).valid
    assert a.points == brute_force_marks(shape)


def test_arrangement_constructor_enforces_axioms():
    with pytest.raises(NotAnArrangementError) as err:
        Arrangement(frozenset(), frozenset({X_AXIS, Y_AXIS}))
    assert err.value.report.violations_rule2 == {(X_AXIS, Y_AXIS)}


def test_validate_examples():
    assert validate(RawPointLineSet()).valid
    r = validate(parse_raw_set((FIXTURES / "lone_mark.json").read_text()))
    assert not r.valid and r.violations_rule1 == {P(0, 0)} and not r.violations_rule2
    r = validate(parse_raw_set((FIXTURES / "missing_origin.json").read_text()))
    assert not r.valid and not r.violations_rule1
    assert r.violations_rule2 == {tuple(sorted((X_AXIS, Y_AXIS)))}


def test_validate_point_on_lines_that_cross_elsewhere():
    # the lines meet at the origin, but the listed point is on only one of them
    raw = RawPointLineSet({P(0, 0), P(3, 0)}, {X_AXIS, Y_AXIS})
    assert validate(raw).violations_rule1 == {P(3, 0)}


def test_validate_reports_all_violations():
    lines = {X_AXIS, Y_AXIS, canonical_line(1, -1, 0)}
    r = validate(RawPointLineSet({P(7, 7), P(8, 9)}, lines))
    assert r.violations_rule1 == {P(7, 7), P(8, 9)}
    assert len(r.violations_rule2) == 3


@pytest.mark.parametrize("name", ["pappus", "desargues"])
def test_classical_configurations_fail_rule_2(name):
    r = validate(parse_raw_set((FIXTURES / f"{name}.json").read_text()))
    assert not r.valid
    assert not r.violations_rule1  # every point is on three lines
    assert r.violations_rule2


def test_arr_union_examples():
    s = fixture_shape("triangle")
    assert arr_union(s, EMPTY_SHAPE) == arrangement_of(s)
    domino = arr_union(fixture_shape("domino_left"), fixture_shape("domino_right"))
    # carriers y=0, y=1, x=0, x=1, x=2; marks: 2 x 3 grid crossings
    assert {l.as_tuple() for l in domino.lines} == {(0, 1, 0), (0, 1, -1), (1, 0, 0), (1, 0, -1), (1, 0, -2)}
    assert domino.points == {P(x, y) for x in (0, 1, 2) for y in (0, 1)}
    assert domino.points == brute_force_marks(sum_(fixture_shape("domino_left"), fixture_shape("domino_right")))


def test_arr_difference_examples():
    sq = fixture_shape("square")
    assert arr_difference(sq, sq) == EMPTY_ARRANGEMENT
    assert arr_difference(sq, EMPTY_SHAPE) == arrangement_of(sq)
    top = shape_of((0, 1, 1, 1))
    u = arr_difference(sq, top)
    assert u.lines == {X_AXIS, Y_AXIS, LineEq(1, 0, -1)}
    assert u.points == {P(0, 0), P(1, 0)}
    naive = naive_difference(arrangement_of(sq), arrangement_of(top))
    assert validate(naive).violations_rule1 == {P(0, 1), P(1, 1)}


def test_arr_intersection_examples():
    sq = fixture_shape("square")
    assert arr_intersection(sq, sq) == arrangement_of(sq)
    assert arr_intersection(sq, EMPTY_SHAPE) == EMPTY_ARRANGEMENT
    a = arr_intersection(shape_of((0, 0, 2, 0)), shape_of((1, 0, 3, 0)))
    assert a.lines == {X_AXIS} and not a.points


@given(shapes, shapes)
def test_definitional_operations_are_closed(s1, s2):
    for op in (arr_union, arr_difference, arr_intersection):
        assert validate(op(s1, s2)).valid


def test_naive_identities():
    a = arrangement_of(fixture_shape("triangle"))
    assert same(naive_union(a, EMPTY_ARRANGEMENT), a)
    assert same(naive_difference(a, EMPTY_ARRANGEMENT), a)
    assert same(naive_difference(a, a), EMPTY_ARRANGEMENT)
    assert same(naive_intersection(a, a), a)
    assert same(naive_intersection(a, EMPTY_ARRANGEMENT), EMPTY_ARRANGEMENT)


def test_naive_union_misses_crossings():
    rails, bar = fixture_shape("rails"), fixture_shape("crossbar")
    raw = naive_union(arrangement_of(rails), arrangement_of(bar))
    r = validate(raw)
    assert not r.violations_rule1
    missing = {line_through(P(0, 0), P(0, 1)), line_through(P(2, 0), P(2, 1))}
    assert {pair for pair in r.violations_rule2} == {
        tuple(sorted((m, LineEq(0, 1, -3)))) for m in missing
    }
    assert validate(arr_union(rails, bar)).valid
    assert {P(0, 3), P(2, 3)} <= arr_union(rails, bar).points


def test_naive_union_distant_segments():
    h = arrangement_of(shape_of((0, 0, 1, 0)))
    v = arrangement_of(shape_of((5, 3, 5, 4)))
    r = validate(naive_union(h, v))
    assert r.violations_rule2 == {(LineEq(0, 1, 0), LineEq(1, 0, -5))}
    assert arr_union(shape_of((0, 0, 1, 0)), shape_of((5, 3, 5, 4))).points == {P(5, 0)}


def test_naive_union_can_agree():
    # two shapes on the same pair of crossing carriers
    s1, s2 = shape_of((0, 0, 1, 0), (0, 0, 0, 1)), shape_of((2, 0, 3, 0), (0, 2, 0, 3))
    raw = naive_union(arrangement_of(s1), arrangement_of(s2))
    assert validate(raw).valid and same(raw, arr_union(s1, s2))


def test_naive_difference_rule_2_only():
    plus = shape_of((-1, 0, 1, 0), (0, -1, 0, 1))
    cross = fixture_shape("x_shape")
    r = validate(naive_difference(arrangement_of(plus), arrangement_of(cross)))
    assert not r.violations_rule1
    assert r.violations_rule2 == {(X_AXIS, Y_AXIS)}
    assert arr_difference(plus, cross) == arrangement_of(plus)


def test_naive_intersection_valid_but_wrong():
    tri = fixture_shape("triangle")
    outside = shape_of((3, 0, 4, 0), (2, 4, 3, 6), (3, -2, 4, -4))
    assert arrangement_of(outside).lines == arrangement_of(tri).lines
    raw = naive_intersection(arrangement_of(tri), arrangement_of(outside))
    assert validate(raw).valid
    assert same(raw, arrangement_of(tri))
    assert arr_intersection(tri, outside) == EMPTY_ARRANGEMENT


def test_naive_intersection_rule_1():
    plus = shape_of((-1, 0, 1, 0), (0, -1, 0, 1))
    other = shape_of((-1, 0, 1, 0), (-1, -1, 1, 1))
    raw = naive_intersection(arrangement_of(plus), arrangement_of(other))
    assert raw.lines == {X_AXIS} and raw.points == {P(0, 0)}
    assert validate(raw).violations_rule1 == {P(0, 0)}


def test_counting_law_small():
    rng = random.Random(7)
    for n in range(2, 8):
        assert len(arrangement_of_lines(general_position_lines(rng, n)).points) == n * (n - 1) // 2


def test_parallel_adds_no_points():
    base = arrangement_of(fixture_shape("parallels"))
    more = arrangement_of(sum_(fixture_shape("parallels"), shape_of((0, 5, 1, 5))))
    assert len(more.lines) == 3 and not more.points and not base.points
