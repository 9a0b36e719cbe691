from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from convex_census.geometry import (GeneralPositionError, Orientation, Point, angle_cmp,
                                    convex_hull, cross, in_region, integer_coords,
                                    is_convex_cycle, is_convex_position, lex_less,
                                    orientation, point_in_convex_polygon, segments_cross,
                                    sort_by_angle, to_fraction)

P = Point.of
coords = st.fractions(min_value=-50, max_value=50, max_denominator=12)
points = st.builds(Point, coords, coords)


def test_orientation_examples():
    assert orientation(P(0, 0), P(1, 0), P(0, 1)) is Orientation.CCW
    assert orientation(P(0, 0), P(1, 1), P(2, 2)) is Orientation.COLLINEAR
    assert orientation(P(0, 0), P(0, 1), P(1, 1)) is Orientation.CW


def test_lex_less_examples():
    assert lex_less(P(0, 0), P(1, 0))
    assert lex_less(P(1, 0), P(1, 1))
    assert not lex_less(P(2, 5), P(1, 9))
    with pytest.raises(GeneralPositionError):
        lex_less(P(1, 1), P(1, 1))


def test_in_region_examples():
    a, b, c = P(0, 0), P(4, -1), P(5, 0)
    assert in_region(a, b, c, P(2, -2))
    assert not in_region(a, b, c, P(-1, 0))
    assert not in_region(a, b, c, P(2, 3))


def test_in_region_rejects_collinear():
    with pytest.raises(GeneralPositionError):
        in_region(P(0, 0), P(1, 1), P(5, 0), P(2, 2))


def test_is_convex_cycle_examples():
    assert is_convex_cycle([P(0, 0), P(1, 0), P(1, 1), P(0, 1)])
    assert not is_convex_cycle([P(0, 0), P(4, 0), P(4, 4), P(2, 1)])
    assert is_convex_cycle([P(0, 0), P(3, 1), P(1, 2)])
    # collinear consecutive triple is not strictly convex
    assert not is_convex_cycle([P(0, 0), P(1, 0), P(2, 0), P(1, 1)])


def test_pentagram_is_not_convex():
    # all turns agree but the chain winds twice
    pent = [P(0, 10), P(6, -8), P(-10, 3), P(10, 3), P(-6, -8)]
    assert not is_convex_cycle(pent)


def test_convex_position_examples():
    assert is_convex_position([P(i, i * i) for i in range(5)])
    assert not is_convex_position([P(0, 0), P(1, 0), P(1, 1), P(0, 1), P(Fraction(1, 2), Fraction(1, 3))])
    assert is_convex_position([P(0, 0), P(2, 1), P(1, 3)])
    with pytest.raises(GeneralPositionError):
        is_convex_position([P(0, 0), P(1, 1), P(2, 2), P(0, 5)])


def test_to_fraction_rejects_floats():
    with pytest.raises(TypeError):
        to_fraction(0.5)
    assert to_fraction("1/3") == Fraction(1, 3)


def test_point_in_polygon_and_crossing():
    sq = [P(0, 0), P(4, 0), P(4, 4), P(0, 4)]
    assert point_in_convex_polygon(P(1, 1), sq)
    assert not point_in_convex_polygon(P(4, 2), sq)  # boundary is not interior
    assert segments_cross(P(0, 0), P(4, 4), P(0, 4), P(4, 0))
    assert not segments_cross(P(0, 0), P(4, 4), P(4, 4), P(8, 0))


@given(points, points, points)
def test_orientation_antisymmetry(p, q, r):
    assert orientation(p, q, r) == -orientation(q, p, r)
    assert orientation(p, q, r) == orientation(q, r, p)


@given(st.lists(points, min_size=3, max_size=12, unique=True))
def test_hull_is_convex_and_contains_points(ps):
    hull = convex_hull(ps)
    if len(hull) < 3:
        return
    assert is_convex_cycle(hull)
    assert hull[0] == min(ps)
    n = len(hull)
    for p in ps:
        assert all(cross(hull[i], hull[(i + 1) % n], p) >= 0 for i in range(n))


@given(st.lists(points, min_size=2, max_size=10, unique=True))
def test_integer_coords_preserve_orientation(ps):
    ip = integer_coords(ps)
    for i in range(len(ps) - 2):
        a = cross(ps[i], ps[i + 1], ps[i + 2])
        b = cross(ip[i], ip[i + 1], ip[i + 2])
        assert (a > 0) == (b > 0) and (a == 0) == (b == 0)


def test_sort_by_angle_is_counterclockwise():
    c = P(0, 0)
    pts = [P(-1, -1), P(1, 0), P(0, 1), P(-1, 0), P(1, -1), P(1, 1)]
    order = sort_by_angle(c, pts)
    seq = [pts[i] for i in order]
    assert seq[0] == P(1, 0)
    assert all(angle_cmp(seq[i], seq[i + 1]) < 0 for i in range(len(seq) - 1))
