import pytest

from convex_census.constructions import arc_points, balanced_triangulation
from convex_census.oracle import (MAX_POLYGON_VERTICES, OracleSizeError, brute_count,
                                  brute_count_paths, brute_paths)
from convex_census.pslg import Pslg


def test_examples():
    assert brute_count(Pslg([(0, 0), (4, 1), (2, 5)], [(0, 1), (1, 2), (2, 0)])) == 1
    quad = Pslg(arc_points(4), [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)])
    assert brute_count(quad) == 3
    fan = Pslg(arc_points(5), [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2), (0, 3)])
    assert brute_count(fan) == 6


def test_path_examples():
    assert brute_count_paths(Pslg([(0, 0), (1, 2)], [(0, 1)]), 0, 1) == 1
    assert brute_count_paths(balanced_triangulation(1).pslg, 2, 0) == 2
    assert brute_count_paths(balanced_triangulation(3).pslg, 8, 0) == 26


def test_paths_turn_right():
    g = balanced_triangulation(3).pslg
    for p in brute_paths(g, 8, 0):
        assert p[0] == 8 and p[-1] == 0 and len(set(p)) == len(p)


def test_size_limits():
    big = Pslg(arc_points(MAX_POLYGON_VERTICES + 1), [(0, 1)])
    with pytest.raises(OracleSizeError):
        brute_count(big)
    with pytest.raises(OracleSizeError):
        brute_count_paths(big, 0, 1)


def test_fan_triangulations_match_dp():
    from convex_census.counting import count_convex_polygons
    for n in range(4, 10):
        edges = [(i, i + 1) for i in range(n - 1)] + [(0, j) for j in range(2, n)]
        g = Pslg(arc_points(n), edges)
        assert brute_count(g) == count_convex_polygons(g)
