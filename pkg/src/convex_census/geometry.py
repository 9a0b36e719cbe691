"""Exact planar predicates on rational points.

Everything here works on :class:`fractions.Fraction` (or plain ``int``)
coordinates; no predicate ever touches floating point.  "Leftmost" is the
lexicographic (x, then y) order, which is what an infinitesimal clockwise
rotation of the plane would produce.
"""
from __future__ import annotations

import enum
import math
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, NamedTuple, Sequence, Union

Number = Union[int, Fraction, str]


class GeneralPositionError(ValueError):
    """Raised when an input violates the no-three-collinear / distinctness assumption."""


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x: Number, y: Number) -> "Point":
        return cls(to_fraction(x), to_fraction(y))

    def __add__(self, other):  # type: ignore[override]
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return Point(self.x - other.x, self.y - other.y)

    def scale(self, s) -> "Point":
        return Point(self.x * s, self.y * s)

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


def to_fraction(v: Number) -> Fraction:
    """Parse an int, Fraction, decimal string or ``"p/q"`` string exactly."""
    if isinstance(v, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(v, (int, Fraction)):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v.strip())
    if isinstance(v, float):
        raise TypeError("floating point coordinates are not accepted; use a string")
    raise TypeError(f"unsupported coordinate type {type(v).__name__}")


class Orientation(enum.IntEnum):
    CW = -1
    COLLINEAR = 0
    CCW = 1


def cross(p: Point, q: Point, r: Point):
    """Exact (q - p) x (r - p)."""
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def orientation(p: Point, q: Point, r: Point) -> Orientation:
    c = cross(p, q, r)
    if c > 0:
        return Orientation.CCW
    if c < 0:
        return Orientation.CW
    return Orientation.COLLINEAR


def lex_less(p: Point, q: Point) -> bool:
    if p == q:
        raise GeneralPositionError(f"equal points {p} cannot be ordered")
    return (p[0], p[1]) < (q[0], q[1])


def _require_noncollinear(*pts: Point) -> None:
    n = len(pts)
    for i in range(n):
        for j in range(i + 1, n):
            if pts[i] == pts[j]:
                raise GeneralPositionError(f"duplicate point {pts[i]}")
            for k in range(j + 1, n):
                if cross(pts[i], pts[j], pts[k]) == 0:
                    raise GeneralPositionError(
                        f"collinear triple {pts[i]}, {pts[j]}, {pts[k]}")


def in_region(a: Point, b: Point, c: Point, v: Point) -> bool:
    """Membership of ``v`` in R(a, b, c).

    R(a, b, c) is the intersection of: lex-after ``a``; right of the directed
    line a->b; right of the directed line c->b.  Only the triples those tests
    read (abc, abv, cbv) must be non-collinear; a, c, v may share a line.
    """
    _require_noncollinear(a, b, c)
    _require_noncollinear(a, b, v)
    _require_noncollinear(c, b, v)
    return (lex_less(a, v)
            and cross(a, b, v) < 0
            and cross(c, b, v) < 0)


def is_convex_cycle(ps: Sequence[Point]) -> bool:
    """True iff the closed chain ``ps`` is a strictly convex polygon (either sense).

    Besides every turn having one sign, every vertex must lie strictly on the
    inner side of every edge; that rejects star polygons which wind twice.
    """
    n = len(ps)
    if n < 3:
        raise ValueError("a cycle needs at least 3 points")
    sign = 0
    for i in range(n):
        c = cross(ps[i - 2], ps[i - 1], ps[i])
        if c == 0:
            return False
        s = 1 if c > 0 else -1
        if sign == 0:
            sign = s
        elif s != sign:
            return False
    for i in range(n):
        p, q = ps[i - 1], ps[i]
        for j in range(n):
            if j == i or j == (i - 1) % n:
                continue
            c = cross(p, q, ps[j])
            if c == 0 or (c > 0) != (sign > 0):
                return False
    return True


def convex_hull(points: Iterable[Point]) -> list[Point]:
    """Strict convex hull, counterclockwise, starting at the lex-least point."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def half(seq):
        chain: list[Point] = []
        for p in seq:
            while len(chain) >= 2 and cross(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower = half(pts)
    upper = half(reversed(pts))
    return lower[:-1] + upper[:-1]


def is_convex_position(ps: Iterable[Point]) -> bool:
    pts = list(ps)
    if len(pts) < 3:
        raise ValueError("convex position needs at least 3 points")
    _require_noncollinear(*pts)
    return len(convex_hull(pts)) == len(pts)


def point_in_convex_polygon(p: Point, poly: Sequence[Point]) -> bool:
    """Strict interior test for a counterclockwise convex polygon."""
    n = len(poly)
    return all(cross(poly[i], poly[(i + 1) % n], p) > 0 for i in range(n))


def point_in_triangle(p: Point, a: Point, b: Point, c: Point) -> bool:
    """Strict interior test; the triangle may have either orientation."""
    d1, d2, d3 = cross(a, b, p), cross(b, c, p), cross(c, a, p)
    return (d1 > 0 and d2 > 0 and d3 > 0) or (d1 < 0 and d2 < 0 and d3 < 0)


def segments_cross(p1: Point, p2: Point, q1: Point, q2: Point) -> bool:
    """Proper crossing of two open segments (shared endpoints do not count)."""
    if len({p1, p2, q1, q2}) < 4:
        return False
    d1, d2 = cross(q1, q2, p1), cross(q1, q2, p2)
    d3, d4 = cross(p1, p2, q1), cross(p1, p2, q2)
    if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and \
            ((d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)):
        return True
    return False


def on_open_segment(p: Point, a: Point, b: Point) -> bool:
    if p == a or p == b or cross(a, b, p) != 0:
        return False
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def _half(v: Point) -> int:
    # 0 for directions with angle in [0, pi), 1 for [pi, 2pi)
    return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1


def angle_cmp(u: Point, v: Point) -> int:
    """Compare direction vectors by polar angle in [0, 2pi), exactly."""
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return -1 if hu < hv else 1
    c = u[0] * v[1] - u[1] * v[0]
    if c > 0:
        return -1
    if c < 0:
        return 1
    return 0


def sort_by_angle(center: Point, pts: Sequence[Point]) -> list[int]:
    """Indices of ``pts`` sorted counterclockwise by angle around ``center``."""
    key = cmp_to_key(angle_cmp)
    return sorted(range(len(pts)), key=lambda i: key(pts[i] - center))


def integer_coords(points: Sequence[Point]) -> list[tuple[int, int]]:
    """Scale all points by the lcm of their denominators.

    Orientation signs are preserved, and int arithmetic is far cheaper than
    Fraction arithmetic in hot loops.
    """
    m = 1
    for p in points:
        m = math.lcm(m, p.x.denominator, p.y.denominator)
    return [(int(p.x * m), int(p.y * m)) for p in points]
