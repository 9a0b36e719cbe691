"""Polynomial-time counting and enumeration of convex polygons in a plane graph.

Every convex polygon is written canonically as a counterclockwise cycle
``(v1, ..., vt)`` starting at its lex-least vertex ``v1``.  For an anchor
``a = v1`` the table entry ``f_k(a, b, c)`` counts convex arcs
``(a, ..., b, c)`` with ``k`` vertices, and

    f_k(a, b, c) = sum of f_{k-1}(a, v, b) over v in R(a, b, c)

where R(a, b, c) is the region tested by :func:`geometry.in_region`.  An arc
closes into a polygon exactly when ``{c, a}`` is an edge.

For fixed ``a`` every arc turns counterclockwise around ``a`` by less than a
half turn, so arc states ``(b, c)`` can be processed in angular order of
``b``.  :func:`count_convex_polygons` uses that order to sum the layers over
``k`` directly; :func:`count_by_length` keeps the rolling per-length layers.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from typing import Callable, Iterator

from .geometry import integer_coords
from .pslg import Pslg, require_valid


@dataclass(frozen=True)
class ConvexPolygon:
    cycle: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.cycle)

    def edges(self) -> list[tuple[int, int]]:
        c = self.cycle
        return [(c[i], c[(i + 1) % len(c)]) for i in range(len(c))]


class _Frame:
    """Integer coordinates and adjacency shared by all anchors of one graph."""

    __slots__ = ("n", "pts", "adj", "adjset", "rank")

    def __init__(self, g: Pslg):
        self.n = g.n
        self.pts = integer_coords(g.vertices)
        self.adj = g.adjacency()
        self.adjset = [set(a) for a in self.adj]
        order = sorted(range(self.n), key=lambda i: self.pts[i])
        self.rank = [0] * self.n
        for r, i in enumerate(order):
            self.rank[i] = r

    def cross(self, p: int, q: int, r: int) -> int:
        P, Q, R = self.pts[p], self.pts[q], self.pts[r]
        return (Q[0] - P[0]) * (R[1] - P[1]) - (Q[1] - P[1]) * (R[0] - P[0])

    def ccw_order_around(self, a: int, cand: list[int]) -> list[int]:
        """Sort ``cand`` counterclockwise around ``a``; all must lie in an open half-plane."""
        return sorted(cand, key=cmp_to_key(lambda u, w: -1 if self.cross(a, u, w) > 0 else 1))


def _anchor_totals(fr: _Frame, a: int) -> dict[tuple[int, int], int]:
    """F(a, b, c) = sum over k of f_k(a, b, c), keyed by (b, c); zero entries omitted."""
    pts, adj, adjset, rank = fr.pts, fr.adj, fr.adjset, fr.rank
    ra = rank[a]
    ax, ay = pts[a]
    cand = [b for b in range(fr.n) if rank[b] > ra and adj[b]]
    F: dict[tuple[int, int], int] = {}
    for b in fr.ccw_order_around(a, cand):
        bx, by = pts[b]
        abx, aby = bx - ax, by - ay
        starts = b in adjset[a]
        preds = []
        for v in adj[b]:
            fv = F.get((v, b))
            if fv:
                preds.append((v, fv))
        if not starts and not preds:
            continue
        for c in adj[b]:
            if rank[c] <= ra:
                continue
            cx, cy = pts[c]
            if abx * (cy - ay) - aby * (cx - ax) <= 0:
                continue  # (a, b, c) must turn counterclockwise
            total = 1 if starts else 0
            for v, fv in preds:
                vx, vy = pts[v]
                # v right of c->b (v right of a->b already holds for stored states)
                if (bx - cx) * (vy - cy) - (by - cy) * (vx - cx) < 0:
                    total += fv
            if total:
                F[(b, c)] = total
    return F


def count_convex_polygons(g: Pslg, check: bool = True) -> int:
    """Exact number of convex polygons whose edges all belong to ``g``."""
    if check:
        require_valid(g)
    fr = _Frame(g)
    total = 0
    for a in range(fr.n):
        if len(fr.adj[a]) < 2:
            continue
        F = _anchor_totals(fr, a)
        for (b, c), val in F.items():
            if c in fr.adjset[a]:
                total += val
    return total


@dataclass
class LayerStats:
    """Work counters for :func:`count_by_length`, used to check the O(n^4) budget."""
    transitions: int = 0
    max_layer_size: int = 0
    layers: int = 0


def count_by_length(g: Pslg, check: bool = True,
                    stats: LayerStats | None = None) -> dict[int, int]:
    """Histogram {k: number of convex k-gons}, via rolling f_{k-1} -> f_k layers."""
    if check:
        require_valid(g)
    fr = _Frame(g)
    pts, adj, adjset, rank = fr.pts, fr.adj, fr.adjset, fr.rank
    hist: dict[int, int] = {}
    for a in range(fr.n):
        if len(adj[a]) < 2:
            continue
        ra = rank[a]
        ax, ay = pts[a]

        def ccw(b, c):
            return (pts[b][0] - ax) * (pts[c][1] - ay) - (pts[b][1] - ay) * (pts[c][0] - ax) > 0

        layer: dict[tuple[int, int], int] = {}
        for b in adj[a]:
            if rank[b] <= ra:
                continue
            for c in adj[b]:
                if rank[c] > ra and ccw(b, c):
                    layer[(b, c)] = 1
        k = 3
        succ_cache: dict[tuple[int, int], list[int]] = {}
        while layer:
            closed = sum(val for (b, c), val in layer.items() if c in adjset[a])
            if closed:
                hist[k] = hist.get(k, 0) + closed
            if stats is not None:
                stats.layers += 1
                stats.max_layer_size = max(stats.max_layer_size, len(layer))
            nxt: dict[tuple[int, int], int] = {}
            for (v, b), val in layer.items():
                succ = succ_cache.get((v, b))
                if succ is None:
                    bx, by = pts[b]
                    vx, vy = pts[v]
                    succ = []
                    for c in adj[b]:
                        if rank[c] <= ra or not ccw(b, c):
                            continue
                        cx, cy = pts[c]
                        if (bx - cx) * (vy - cy) - (by - cy) * (vx - cx) < 0:
                            succ.append(c)
                    succ_cache[(v, b)] = succ
                if stats is not None:
                    stats.transitions += len(adj[b])
                for c in succ:
                    nxt[(b, c)] = nxt.get((b, c), 0) + val
            layer = nxt
            k += 1
    return dict(sorted(hist.items()))


def iter_convex_polygons(g: Pslg, check: bool = True) -> Iterator[ConvexPolygon]:
    """Yield every convex polygon once, in canonical form.

    Backtracks through the summed table; every explored branch ends in a
    polygon, so the cost is proportional to the output size.
    """
    if check:
        require_valid(g)
    fr = _Frame(g)
    for a in range(fr.n):
        if len(fr.adj[a]) < 2:
            continue
        F = _anchor_totals(fr, a)
        if not F:
            continue
        pts = fr.pts

        def arcs(b: int, c: int) -> Iterator[list[int]]:
            # arcs (a, ..., b, c), yielded reversed as [c, b, ..., a-successor]
            if b in fr.adjset[a]:
                yield [c, b]
            bx, by = pts[b]
            cx, cy = pts[c]
            for v in fr.adj[b]:
                if (v, b) in F:
                    vx, vy = pts[v]
                    if (bx - cx) * (vy - cy) - (by - cy) * (vx - cx) < 0:
                        for tail in arcs(v, b):
                            yield [c] + tail

        finals = sorted(k for k in F if k[1] in fr.adjset[a])
        for b, c in finals:
            for rev in arcs(b, c):
                yield ConvexPolygon((a,) + tuple(reversed(rev)))


def enumerate_convex_polygons(g: Pslg, visitor: Callable[[ConvexPolygon], object],
                              check: bool = True) -> int:
    count = 0
    for poly in iter_convex_polygons(g, check=check):
        visitor(poly)
        count += 1
    return count


def count_convex_paths(g: Pslg, a: int, b: int, check: bool = True) -> int:
    """Number of convex paths from ``a`` to ``b`` in ``g``.

    A convex path ``(a = p1, ..., pm = b)`` turns right at every interior
    vertex and, closed up by the segment ``ba``, is a convex polygon traversed
    clockwise; the single edge ``ab`` counts when present.  The table is
    anchored at ``a``: intermediate vertices lie strictly left of a->b and
    appear in clockwise order around ``a``.
    """
    if check:
        require_valid(g)
    if a == b:
        raise ValueError("path endpoints must differ")
    if not (0 <= a < g.n and 0 <= b < g.n):
        raise IndexError(f"vertex index out of range for {g.n} vertices")
    fr = _Frame(g)
    pts, adj, adjset = fr.pts, fr.adj, fr.adjset
    cand = [w for w in range(fr.n) if w not in (a, b) and fr.cross(a, b, w) > 0]
    inside = set(cand)
    # clockwise around a == reverse of counterclockwise
    order = fr.ccw_order_around(a, cand)[::-1]
    G: dict[tuple[int, int], int] = {}
    for w in order:
        starts = w in adjset[a]
        preds = [(u, G[(u, w)]) for u in adj[w] if (u, w) in G]
        if not starts and not preds:
            continue
        for x in adj[w]:
            if x != b and x not in inside:
                continue
            if fr.cross(a, w, x) >= 0:
                continue
            total = 1 if starts else 0
            for u, gu in preds:
                if fr.cross(u, w, x) < 0:
                    total += gu
            if total:
                G[(w, x)] = total
    return (1 if b in adjset[a] else 0) + sum(v for (w, x), v in G.items() if x == b)
