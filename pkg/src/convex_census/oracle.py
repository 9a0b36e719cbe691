"""Deliberately naive ground truth for the counting DP.

Polygons are found by scanning vertex subsets (no cycles, no tables), paths
by depth-first search over simple paths.  Neither shares code with
:mod:`convex_census.counting` beyond the basic predicates.
"""
from __future__ import annotations

from itertools import combinations

from .geometry import convex_hull, cross, integer_coords, is_convex_cycle
from .pslg import Pslg, require_valid

MAX_POLYGON_VERTICES = 22
MAX_PATH_VERTICES = 18


class OracleSizeError(ValueError):
    pass


def brute_polygons(g: Pslg, check: bool = True) -> list[tuple[int, ...]]:
    """Canonical cycles of all convex polygons of ``g``."""
    if check:
        require_valid(g)
    if g.n > MAX_POLYGON_VERTICES:
        raise OracleSizeError(f"subset oracle limited to n <= {MAX_POLYGON_VERTICES}, got {g.n}")
    ip = integer_coords(g.vertices)
    index = {p: i for i, p in enumerate(ip)}
    adj = g.adjacency()
    useful = [v for v in range(g.n) if len(adj[v]) >= 2]
    found = []
    for size in range(3, len(useful) + 1):
        for subset in combinations(useful, size):
            hull = convex_hull([ip[v] for v in subset])
            if len(hull) != size:
                continue
            cyc = [index[p] for p in hull]
            if all(g.has_edge(cyc[i - 1], cyc[i]) for i in range(size)):
                found.append(tuple(cyc))
    return found


def brute_count(g: Pslg, check: bool = True) -> int:
    return len(brute_polygons(g, check=check))


def brute_paths(g: Pslg, a: int, b: int, check: bool = True) -> list[tuple[int, ...]]:
    """All convex paths from ``a`` to ``b`` (see counting.count_convex_paths)."""
    if check:
        require_valid(g)
    if g.n > MAX_PATH_VERTICES:
        raise OracleSizeError(f"path oracle limited to n <= {MAX_PATH_VERTICES}, got {g.n}")
    if a == b:
        raise ValueError("path endpoints must differ")
    pts = integer_coords(g.vertices)
    adj = g.adjacency()
    out: list[tuple[int, ...]] = []
    path = [a]
    on_path = {a}

    def dfs() -> None:
        u = path[-1]
        for w in adj[u]:
            if w in on_path:
                continue
            if len(path) >= 2 and cross(pts[path[-2]], pts[u], pts[w]) >= 0:
                continue  # prefix must keep turning right
            path.append(w)
            if w == b:
                if len(path) == 2 or (is_convex_cycle([pts[v] for v in path])
                                      and cross(pts[path[0]], pts[path[1]], pts[path[2]]) < 0):
                    out.append(tuple(path))
            else:
                on_path.add(w)
                dfs()
                on_path.discard(w)
            path.pop()

    dfs()
    return out


def brute_count_paths(g: Pslg, a: int, b: int, check: bool = True) -> int:
    return len(brute_paths(g, a, b, check=check))
