"""Extremal instances and the convex-position map for a chosen face.

Points that the classical constructions put on a circular arc are placed on
the parabola ``(i, i^2)`` instead: the order along the arc and convex
position are all that matter, and the parabola keeps coordinates integral.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from typing import Sequence

from .counting import iter_convex_polygons
from .geometry import (GeneralPositionError, Point, cross, integer_coords,
                       point_in_convex_polygon, segments_cross, sort_by_angle)
from .pslg import Pslg, Triangulation

MAX_BALANCED_K = 20
MAX_CONCAT_VERTICES = 2000
MAX_CONTAINING_VERTICES = 22


def arc_points(n: int) -> list[Point]:
    if n < 2:
        raise ValueError("need at least 2 arc points")
    return [Point.of(i, i * i) for i in range(n)]


def _balanced_edges(lo: int, hi: int, edges: set[tuple[int, int]]) -> None:
    edges.add((lo, hi))
    if hi - lo < 2:
        return
    mid = (lo + hi) // 2
    _balanced_edges(lo, mid, edges)
    _balanced_edges(mid, hi, edges)


def balanced_triangulation(k: int) -> Triangulation:
    """T_k on 2^k + 1 arc points; its dual graph is a full binary tree."""
    if not 0 <= k <= MAX_BALANCED_K:
        raise ValueError(f"k must lie in 0..{MAX_BALANCED_K}")
    n = 2 ** k + 1
    edges: set[tuple[int, int]] = set()
    _balanced_edges(0, n - 1, edges)
    return Triangulation.from_pslg(Pslg(arc_points(n), edges), check=False)


def concat_construction(k: int, m: int) -> Triangulation:
    """m copies of T_k glued along the arc; the inner polygon is a fan from vertex 0."""
    if k < 1 or m < 1:
        raise ValueError("k >= 1 and m >= 1 required")
    step = 2 ** k
    n = m * step + 1
    if n > MAX_CONCAT_VERTICES:
        raise ValueError(f"{n} vertices exceeds the limit {MAX_CONCAT_VERTICES}")
    edges: set[tuple[int, int]] = set()
    for j in range(m):
        _balanced_edges(j * step, (j + 1) * step, edges)
    for j in range(2, m + 1):
        edges.add((0, j * step))
    return Triangulation.from_pslg(Pslg(arc_points(n), edges), check=False)


def triangulate_convex_polygon(n: int, rng) -> Triangulation:
    """A random triangulation of arc_points(n) (random recursive apex choice)."""
    edges: set[tuple[int, int]] = set()

    def split(lo: int, hi: int) -> None:
        edges.add((lo, hi))
        if hi - lo < 2:
            return
        apex = rng.randint(lo + 1, hi - 1)
        split(lo, apex)
        split(apex, hi)

    split(0, n - 1)
    return Triangulation.from_pslg(Pslg(arc_points(n), edges), check=False)


def all_convex_triangulations(n: int):
    """Every triangulation of arc_points(n), as edge sets (Catalan(n-2) of them).

    Splits on the triangle standing on the hull edge (0, n-1), i.e. the
    binary-tree bijection.
    """
    if n < 3:
        raise ValueError("need at least 3 points")

    def rec(lo: int, hi: int):
        if hi - lo < 2:
            yield frozenset()
            return
        for apex in range(lo + 1, hi):
            for left in rec(lo, apex):
                for right in rec(apex, hi):
                    yield left | right | {(lo, apex), (apex, hi)}

    hull_edges = {(0, n - 1)}
    for inner in rec(0, n - 1):
        yield frozenset(inner | hull_edges)


# --- convexification ---------------------------------------------------------

@dataclass(frozen=True)
class PolygonMap:
    source: Triangulation
    anchor: Point
    placement: tuple[int, ...]  # placement[v] = position of v' on the target arc
    edge_images: dict           # (p, q) with (o, p, q) counterclockwise -> target path

    def image(self, cycle: Sequence[int]) -> tuple[int, ...]:
        """Target cycle of a counterclockwise source polygon containing the anchor."""
        out: list[int] = []
        for i in range(len(cycle)):
            p, q = cycle[i], cycle[(i + 1) % len(cycle)]
            out.extend(self.edge_images[(p, q)][:-1])
        return tuple(out)

    def to_json(self) -> dict:
        return {
            "anchor": [str(self.anchor.x), str(self.anchor.y)],
            "placement": list(self.placement),
            "edge_images": [
                {"edge": [p, q], "path": list(path)}
                for (p, q), path in sorted(self.edge_images.items())
            ],
        }


def _anchor_candidates(tri: Sequence[Point]):
    a, b, c = tri
    yield Point((a.x + b.x + c.x) / 3, (a.y + b.y + c.y) / 3)
    o = Point((a.x + b.x + c.x) / 3, (a.y + b.y + c.y) / 3)
    # midpoints toward each corner, then ever finer interior barycentric points
    for v in tri:
        yield Point((o.x + v.x) / 2, (o.y + v.y) / 2)
    for denom in range(4, 40):
        for i in range(1, denom - 1):
            for j in range(1, denom - i):
                k = denom - i - j
                yield Point((i * a.x + j * b.x + k * c.x) / denom,
                            (i * a.y + j * b.y + k * c.y) / denom)


def _in_general_position_with(o: Point, pts: Sequence[Point]) -> bool:
    n = len(pts)
    for i in range(n):
        if pts[i] == o:
            return False
        for j in range(i + 1, n):
            if cross(o, pts[i], pts[j]) == 0:
                return False
    return True


def choose_anchor(t: Triangulation, face: Sequence[int]) -> Point:
    tri = [t.vertices[v] for v in face]
    for o in _anchor_candidates(tri):
        if _in_general_position_with(o, t.vertices):
            return o
    raise GeneralPositionError(
        "no interior anchor of the face avoids every line through two vertices; "
        "perturb the input coordinates slightly")


def _resolve_face(t: Triangulation, f) -> tuple[int, int, int]:
    if isinstance(f, int):
        if not 0 <= f < len(t.faces):
            raise ValueError(f"face index {f} out of range ({len(t.faces)} bounded faces)")
        return t.faces[f]
    return t.faces[t.face_index(f)]


def _norm(i: int, j: int) -> tuple[int, int]:
    return (i, j) if i < j else (j, i)


def convexify(t: Triangulation, f) -> tuple[Pslg, PolygonMap]:
    """Map ``t`` to a plane graph on points in convex position.

    ``f`` is a bounded face (index into ``t.faces`` or a vertex triple).  The
    returned graph has an edge p'q' iff some edge e of ``t`` is hit by the
    rays o->p and o->q beyond p and q, and the triangle cut out of that
    wedge by e contains no vertex.
    """
    face = _resolve_face(t, f)
    pts = list(t.vertices)
    n = len(pts)
    o = choose_anchor(t, face)
    order = sort_by_angle(o, pts)
    placement = [0] * n
    for pos, v in enumerate(order):
        placement[v] = pos

    ip = integer_coords(pts + [o])
    O = ip[n]

    def cr(p, q, r):
        return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])

    def in_open_wedge(P, Q, R) -> bool:
        # R strictly between the rays O->P and O->Q (wedge narrower than pi)
        s = cr(O, P, Q)
        return cr(O, P, R) * s > 0 and cr(O, R, Q) * s > 0

    new_edges: set[tuple[int, int]] = set()
    for e in sorted(t.edges):
        U, W = ip[e[0]], ip[e[1]]
        side_o = cr(U, W, O)
        # vertices whose ray from o meets e at or beyond the vertex
        on_e = [p for p in range(n)
                if p in e or (in_open_wedge(U, W, ip[p]) and cr(U, W, ip[p]) * side_o > 0)]
        for i, p in enumerate(on_e):
            for q in on_e[i + 1:]:
                P, Q = ip[p], ip[q]
                if any(in_open_wedge(P, Q, ip[r]) and cr(U, W, ip[r]) * side_o > 0
                       for r in range(n)):
                    continue
                new_edges.add(_norm(placement[p], placement[q]))

    images: dict[tuple[int, int], tuple[int, ...]] = {}
    for i, j in sorted(t.edges):
        p, q = (i, j) if cr(O, ip[i], ip[j]) > 0 else (j, i)
        P, Q = ip[p], ip[q]
        inside = [r for r in range(n)
                  if in_open_wedge(P, Q, ip[r]) and cr(P, Q, ip[r]) > 0]
        # the wedge at o is narrower than pi, so cr() orders it counterclockwise
        inside.sort(key=cmp_to_key(lambda r, s: -1 if cr(O, ip[r], ip[s]) > 0 else 1))
        images[(p, q)] = tuple(placement[v] for v in [p, *inside, q])

    target = Pslg(arc_points(n), new_edges)
    return target, PolygonMap(t, o, tuple(placement), images)


def count_containing_face(t: Triangulation, f) -> int:
    """Convex polygons of ``t`` whose interior contains the face ``f``."""
    if t.n > MAX_CONTAINING_VERTICES:
        raise ValueError(f"enumeration limited to n <= {MAX_CONTAINING_VERTICES}")
    face = _resolve_face(t, f)
    pts = t.vertices
    a, b, c = (pts[v] for v in face)
    centroid = Point((a.x + b.x + c.x) / 3, (a.y + b.y + c.y) / 3)
    count = 0
    for poly in iter_convex_polygons(t.pslg, check=False):
        ring = [pts[v] for v in poly.cycle]
        if point_in_convex_polygon(centroid, ring):
            count += 1
    return count


def polygons_containing(t: Triangulation, o: Point) -> list[tuple[int, ...]]:
    pts = t.vertices
    return [poly.cycle for poly in iter_convex_polygons(t.pslg, check=False)
            if point_in_convex_polygon(o, [pts[v] for v in poly.cycle])]


def random_pslg(n: int, rng, coord_range: int = 30, keep: float = 1.0) -> Pslg:
    """Random integer points in general position with random noncrossing edges.

    Segments are offered in random order and kept when they cross nothing, so
    ``keep=1.0`` yields a (random) triangulation; smaller values thin it out.
    """
    pts: list[tuple[int, int]] = []
    while len(pts) < n:
        p = (rng.randint(-coord_range, coord_range), rng.randint(-coord_range, coord_range))
        if p in pts:
            continue
        if any(cross(pts[i], pts[j], p) == 0 for i in range(len(pts)) for j in range(i + 1, len(pts))):
            continue
        pts.append(p)
    cand = [(i, j) for i in range(n) for j in range(i + 1, n)]
    rng.shuffle(cand)
    edges: list[tuple[int, int]] = []
    for i, j in cand:
        if all(not segments_cross(pts[i], pts[j], pts[a], pts[b]) for a, b in edges):
            edges.append((i, j))
    if keep < 1.0:
        edges = [e for e in edges if rng.random() < keep]
    return Pslg([Point.of(x, y) for x, y in pts], edges)


def random_triangulation(n: int, rng, coord_range: int = 30) -> Triangulation:
    return Triangulation.from_pslg(random_pslg(n, rng, coord_range), check=False)
