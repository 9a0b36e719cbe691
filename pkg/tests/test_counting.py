import random

import pytest

from convex_census.constructions import (all_convex_triangulations, arc_points,
                                         balanced_triangulation, triangulate_convex_polygon)
from convex_census.counting import (LayerStats, count_by_length, count_convex_paths,
                                    count_convex_polygons, enumerate_convex_polygons,
                                    iter_convex_polygons)
from convex_census.geometry import is_convex_cycle
from convex_census.oracle import brute_count_paths, brute_polygons
from convex_census.pslg import InvalidPslgError, Pslg

TRI = Pslg([(0, 0), (4, 1), (2, 5)], [(0, 1), (1, 2), (2, 0)])
QUAD = Pslg([(0, 0), (4, 0), (5, 4), (1, 3)], [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])


def test_small_examples():
    assert count_convex_polygons(TRI) == 1
    assert count_convex_polygons(QUAD) == 3
    assert count_by_length(QUAD) == {3: 2, 4: 1}


def test_enumeration_examples():
    seen = []
    assert enumerate_convex_polygons(TRI, seen.append) == 1
    assert [p.cycle for p in seen] == [(0, 1, 2)]
    sizes = sorted(len(p) for p in iter_convex_polygons(QUAD))
    assert sizes == [3, 3, 4]


def test_invalid_input_rejected():
    bad = Pslg([(0, 0), (4, 4), (0, 4), (4, 0)], [(0, 1), (2, 3)])
    with pytest.raises(InvalidPslgError):
        count_convex_polygons(bad)


def test_agrees_with_oracle_on_random_suite(suite):
    for g in suite:
        want = sorted(brute_polygons(g, check=False))
        got = sorted(p.cycle for p in iter_convex_polygons(g))
        assert got == want
        assert count_convex_polygons(g) == len(want)
        assert sum(count_by_length(g).values()) == len(want)


def test_enumerated_cycles_are_canonical(suite):
    for g in suite[:40]:
        for p in iter_convex_polygons(g):
            c = p.cycle
            assert c[0] == min(c, key=lambda v: g.vertices[v])
            assert is_convex_cycle([g.vertices[v] for v in c])
            assert all(g.has_edge(c[i - 1], c[i]) for i in range(len(c)))


def test_edge_addition_is_monotone(suite):
    for g in suite[:60]:
        edges = g.sorted_edges()
        if len(edges) < 2:
            continue
        sub = Pslg(g.vertices, edges[:-1])
        assert count_convex_polygons(sub) <= count_convex_polygons(g)


def test_paths_agree_with_oracle(suite):
    for g in suite[:50]:
        for a in range(g.n):
            for b in range(g.n):
                if a != b:
                    assert count_convex_paths(g, a, b, check=False) == brute_count_paths(g, a, b, check=False)


def test_paths_examples():
    g = Pslg([(0, 0), (3, 1)], [(0, 1)])
    assert count_convex_paths(g, 0, 1) == 1
    assert count_convex_paths(balanced_triangulation(2).pslg, 4, 0) == 5
    assert count_convex_paths(balanced_triangulation(4).pslg, 16, 0) == 677
    with pytest.raises(ValueError):
        count_convex_paths(g, 0, 0)


def test_all_convex_triangulations_small_n():
    for n in range(4, 8):
        for edges in all_convex_triangulations(n):
            g = Pslg(arc_points(n), edges)
            assert count_convex_polygons(g) == len(brute_polygons(g))


def test_layer_work_stays_within_quartic_budget():
    # transitions of the layered DP, normalised by n^4, must stay bounded
    rng = random.Random(5)
    ratios = []
    for n in (20, 40, 80):
        t = triangulate_convex_polygon(n, rng)
        st = LayerStats()
        count_by_length(t.pslg, check=False, stats=st)
        ratios.append(st.transitions / n ** 4)
    assert max(ratios) < 1.0


def test_large_triangulation_fast_and_consistent():
    t = triangulate_convex_polygon(150, random.Random(11))
    total = count_convex_polygons(t.pslg, check=False)
    assert total == sum(count_by_length(t.pslg, check=False).values())
