import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from eventspan.interval import (ALL_RELATIONS, INF, Allen, EmptyIntervalError, Interval,
                                allen_relate, format_endpoint, geq_flag, holds, interval, inverse,
                                leq_flag, make_interval, span_intervals)

from conftest import intervals, rational


def iv(text):
    lo_closed, hi_closed = text[0] == "[", text[-1] == "]"
    lo, hi = (int(x) for x in text[1:-1].split(","))
    return interval(lo, hi, lo_closed, hi_closed)


ALL_SMALL = [v for lo, hi in itertools.combinations_with_replacement(range(4), 2)
             for a, b in itertools.product((True, False), repeat=2)
             if (v := make_interval(lo, hi, a, b)) is not None]


@pytest.mark.parametrize("q,r,flag,want", [(3, 3, True, True), (3, 3, False, False),
                                           (2, 3, False, True), (4, 3, True, False)])
def test_leq_flag(q, r, flag, want):
    assert leq_flag(q, r, flag) is want
    assert geq_flag(r, q, flag) is want


@pytest.mark.parametrize("lo,hi,a,b", [(5, 4, True, True), (5, 5, True, False),
                                       (5, 5, False, True), (5, 5, False, False)])
def test_empty_intervals(lo, hi, a, b):
    assert make_interval(lo, hi, a, b) is None
    with pytest.raises(EmptyIntervalError):
        interval(lo, hi, a, b)


def test_point_interval():
    assert make_interval(5, 5) == Interval(5, 5, True, True)


def test_infinite_endpoint_rejected():
    with pytest.raises(ValueError):
        make_interval(0, INF)


@pytest.mark.parametrize("a,b,r", [("[1,3]", "[4,5]", "<"), ("[1,3)", "[3,5]", "m"),
                                   ("[2,2]", "[2,2]", "="), ("[1,3]", "[3,5]", "o"),
                                   ("(1,3]", "[3,5]", "o"), ("[1,3]", "(3,5]", "m"),
                                   ("[1,2]", "[1,3]", "s"), ("(1,3)", "[1,3]", "d")])
def test_allen_examples(a, b, r):
    assert allen_relate(iv(a), iv(b)) is Allen(r)


def test_inverse_pairs():
    assert inverse(Allen.BEFORE) is Allen.AFTER
    assert inverse(Allen.MEETS) is Allen.MET_BY
    assert inverse(Allen.EQUAL) is Allen.EQUAL
    assert [r for r in ALL_RELATIONS if r.inverse is r] == [Allen.EQUAL]
    assert all(r.inverse.inverse is r for r in ALL_RELATIONS)


def test_trichotomy_exhaustive():
    for a in ALL_SMALL:
        for b in ALL_SMALL:
            assert sum(holds(a, r, b) for r in ALL_RELATIONS) == 1, (a, b)


def test_inverse_coherence_exhaustive():
    for a in ALL_SMALL:
        for b in ALL_SMALL:
            for r in ALL_RELATIONS:
                assert holds(a, r, b) == holds(b, r.inverse, a)


@pytest.mark.parametrize("a,b,want", [("(1,4)", "[2,6]", "(1,6]"), ("[3,7)", "(3,7]", "[3,7]")])
def test_span_examples(a, b, want):
    assert span_intervals(iv(a), iv(b)) == iv(want)


@given(intervals(rational), intervals(rational), intervals(rational))
def test_span_algebra(a, b, c):
    assert span_intervals(a, a) == a
    assert span_intervals(a, b) == span_intervals(b, a)
    assert span_intervals(span_intervals(a, b), c) == span_intervals(a, span_intervals(b, c))


@given(intervals(rational), intervals(rational), st.lists(rational, max_size=8))
def test_span_covers_both(a, b, points):
    s = span_intervals(a, b)
    for x in points + [a.lo, a.hi, b.lo, b.hi]:
        if a.contains_point(x) or b.contains_point(x):
            assert s.contains_point(x)


@given(intervals(rational), intervals(rational))
def test_same_points_means_same_interval(a, b):
    # probe every endpoint and the midpoints around them
    pts = sorted({a.lo, a.hi, b.lo, b.hi})
    probes = pts + [(x + y) / 2 for x, y in zip(pts, pts[1:])] + [pts[0] - 1, pts[-1] + 1]
    same = all(a.contains_point(x) == b.contains_point(x) for x in probes)
    assert same == (a == b)


def test_render():
    assert str(interval(1, 3, False, True)) == "(1,3]"
    assert format_endpoint(Fraction(5, 2)) == "2.5"
    assert format_endpoint(Fraction(1, 3)) == "1/3"
    assert format_endpoint(-INF) == "-inf"


def test_parse_relation_tokens():
    assert Allen.parse("mi") is Allen.MET_BY
    with pytest.raises(ValueError):
        Allen.parse("x")
