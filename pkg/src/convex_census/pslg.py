"""Planar straight-line graphs, triangulations, dual graphs and their JSON form."""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, Sequence

from .geometry import (Point, angle_cmp, convex_hull, cross, integer_coords,
                       on_open_segment, segments_cross, to_fraction)


class PslgFormatError(ValueError):
    """Malformed graph document; ``location`` names the offending JSON path."""

    def __init__(self, message: str, location: str = ""):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


class InvalidPslgError(ValueError):
    """A graph failed validation where a valid one was required."""

    def __init__(self, report: "ValidationReport"):
        self.report = report
        super().__init__(f"invalid planar straight-line graph: {report.summary()}")


class NotATriangulationError(ValueError):
    pass


Edge = tuple[int, int]


def _norm_edge(i: int, j: int) -> Edge:
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class Pslg:
    vertices: tuple[Point, ...]
    edges: frozenset[Edge]

    def __init__(self, vertices: Iterable, edges: Iterable[Sequence[int]] = ()):
        verts = tuple(v if isinstance(v, Point) else Point.of(*v) for v in vertices)
        n = len(verts)
        es = set()
        for e in edges:
            i, j = int(e[0]), int(e[1])
            if not (0 <= i < n and 0 <= j < n):
                raise PslgFormatError(f"edge {[i, j]} out of range for {n} vertices")
            if i == j:
                raise PslgFormatError(f"self-loop at vertex {i}")
            es.add(_norm_edge(i, j))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", frozenset(es))

    @property
    def n(self) -> int:
        return len(self.vertices)

    def has_edge(self, i: int, j: int) -> bool:
        return _norm_edge(i, j) in self.edges

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for i, j in sorted(self.edges):
            adj[i].append(j)
            adj[j].append(i)
        return adj

    def with_edge(self, i: int, j: int) -> "Pslg":
        return Pslg(self.vertices, set(self.edges) | {_norm_edge(i, j)})

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


@dataclass
class ValidationReport:
    duplicate_points: list[tuple[int, int]] = field(default_factory=list)
    collinear_triples: list[tuple[int, int, int]] = field(default_factory=list)
    crossing_pairs: list[tuple[Edge, Edge]] = field(default_factory=list)
    vertex_on_edge: list[tuple[int, Edge]] = field(default_factory=list)

    def __len__(self) -> int:
        return (len(self.duplicate_points) + len(self.collinear_triples)
                + len(self.crossing_pairs) + len(self.vertex_on_edge))

    @property
    def ok(self) -> bool:
        return len(self) == 0

    def summary(self) -> str:
        if self.ok:
            return "ok"
        parts = []
        for name in ("duplicate_points", "collinear_triples", "crossing_pairs", "vertex_on_edge"):
            k = len(getattr(self, name))
            if k:
                parts.append(f"{k} {name.replace('_', ' ')}")
        return ", ".join(parts)

    def to_json(self) -> dict:
        return {
            "valid": self.ok,
            "duplicate_points": [list(p) for p in self.duplicate_points],
            "collinear_triples": [list(t) for t in self.collinear_triples],
            "crossing_pairs": [[list(e), list(f)] for e, f in self.crossing_pairs],
            "vertex_on_edge": [[v, list(e)] for v, e in self.vertex_on_edge],
        }


def validate(g: Pslg) -> ValidationReport:
    """Brute-force check of every Pslg invariant; violations are returned, not raised."""
    rep = ValidationReport()
    pts = g.vertices
    n = len(pts)
    ip = integer_coords(pts)
    for i in range(n):
        for j in range(i + 1, n):
            if ip[i] == ip[j]:
                rep.duplicate_points.append((i, j))
    dup = {j for _, j in rep.duplicate_points}
    for i in range(n):
        xi, yi = ip[i]
        for j in range(i + 1, n):
            if ip[j] == ip[i]:
                continue
            dxj, dyj = ip[j][0] - xi, ip[j][1] - yi
            for k in range(j + 1, n):
                if ip[k] == ip[i] or ip[k] == ip[j]:
                    continue
                if dxj * (ip[k][1] - yi) - dyj * (ip[k][0] - xi) == 0:
                    rep.collinear_triples.append((i, j, k))
    edges = g.sorted_edges()
    for a in range(len(edges)):
        e = edges[a]
        for b in range(a + 1, len(edges)):
            f = edges[b]
            if segments_cross(ip[e[0]], ip[e[1]], ip[f[0]], ip[f[1]]):
                rep.crossing_pairs.append((e, f))
    for e in edges:
        for v in range(n):
            if v in e or v in dup:
                continue
            if on_open_segment(ip[v], ip[e[0]], ip[e[1]]):
                rep.vertex_on_edge.append((v, e))
    return rep


def require_valid(g: Pslg) -> None:
    rep = validate(g)
    if not rep.ok:
        raise InvalidPslgError(rep)


def rotation_system(g: Pslg) -> list[list[int]]:
    """Neighbours of every vertex sorted counterclockwise by exact angle."""
    ip = integer_coords(g.vertices)
    key = cmp_to_key(angle_cmp)
    rot = []
    for v, nbrs in enumerate(g.adjacency()):
        cx, cy = ip[v]
        rot.append(sorted(nbrs, key=lambda w: key((ip[w][0] - cx, ip[w][1] - cy))))
    return rot


def trace_faces(g: Pslg) -> list[list[int]]:
    """All faces of the embedding as vertex cycles (bounded faces come out CCW)."""
    rot = rotation_system(g)
    pos = [{w: k for k, w in enumerate(r)} for r in rot]
    seen: set[tuple[int, int]] = set()
    faces = []
    for u in range(g.n):
        for v in rot[u]:
            if (u, v) in seen:
                continue
            face = []
            a, b = u, v
            while (a, b) not in seen:
                seen.add((a, b))
                face.append(a)
                r = rot[b]
                w = r[(pos[b][a] - 1) % len(r)]
                a, b = b, w
            faces.append(face)
    return faces


def _signed_area2(pts: Sequence, cyc: Sequence[int]):
    s = 0
    for k in range(len(cyc)):
        p, q = pts[cyc[k - 1]], pts[cyc[k]]
        s += p[0] * q[1] - p[1] * q[0]
    return s


def _connected(g: Pslg) -> bool:
    if g.n == 0:
        return False
    adj = g.adjacency()
    seen = {0}
    todo = deque([0])
    while todo:
        v = todo.popleft()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return len(seen) == g.n


def _bounded_triangles(g: Pslg) -> list[tuple[int, int, int]] | None:
    """Bounded faces as CCW triples, or None when g is not a triangulation."""
    if g.n == 2:
        return [] if g.edges == {(0, 1)} else None
    if g.n < 3 or not _connected(g):
        return None
    ip = integer_coords(g.vertices)
    faces = trace_faces(g)
    outer = [f for f in faces if _signed_area2(ip, f) <= 0]
    inner = [f for f in faces if _signed_area2(ip, f) > 0]
    if len(outer) != 1 or any(len(f) != 3 for f in inner):
        return None
    hull = convex_hull(g.vertices)
    index = {p: i for i, p in enumerate(g.vertices)}
    hull_idx = [index[p] for p in hull]
    o = outer[0]
    if len(o) != len(hull_idx) or set(o) != set(hull_idx):
        return None
    return [tuple(f) for f in inner]  # type: ignore[misc]


def is_triangulation(g: Pslg) -> bool:
    require_valid(g)
    return _bounded_triangles(g) is not None


def _canonical_triangle(f: Sequence[int]) -> tuple[int, int, int]:
    k = f.index(min(f))
    return (f[k], f[(k + 1) % 3], f[(k + 2) % 3])


@dataclass(frozen=True)
class Triangulation:
    pslg: Pslg
    faces: tuple[tuple[int, int, int], ...]

    @classmethod
    def from_pslg(cls, g: Pslg, check: bool = True) -> "Triangulation":
        if check:
            require_valid(g)
        tris = _bounded_triangles(g)
        if tris is None:
            raise NotATriangulationError("bounded faces do not all form triangles tiling the hull")
        return cls(g, tuple(sorted(_canonical_triangle(f) for f in tris)))

    @property
    def n(self) -> int:
        return self.pslg.n

    @property
    def vertices(self) -> tuple[Point, ...]:
        return self.pslg.vertices

    @property
    def edges(self) -> frozenset[Edge]:
        return self.pslg.edges

    def face_index(self, face: Sequence[int]) -> int:
        key = set(face)
        for i, f in enumerate(self.faces):
            if set(f) == key:
                return i
        raise ValueError(f"{list(face)} is not a bounded face")


@dataclass(frozen=True)
class DualGraph:
    nodes: tuple[tuple[int, int, int], ...]
    edges: tuple[tuple[int, int], ...]

    def degree(self, i: int) -> int:
        return sum(1 for e in self.edges if i in e)

    def is_tree(self) -> bool:
        k = len(self.nodes)
        if k == 0 or len(self.edges) != k - 1:
            return False
        adj: list[list[int]] = [[] for _ in range(k)]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        seen = {0}
        todo = [0]
        while todo:
            v = todo.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        return len(seen) == k


def dual_graph(t: Triangulation) -> DualGraph:
    owner: dict[Edge, list[int]] = {}
    for fi, f in enumerate(t.faces):
        for k in range(3):
            owner.setdefault(_norm_edge(f[k], f[(k + 1) % 3]), []).append(fi)
    adj = sorted({tuple(sorted(fs)) for fs in owner.values() if len(fs) == 2})
    return DualGraph(t.faces, tuple(adj))  # type: ignore[arg-type]


# --- serialization -----------------------------------------------------------

def _fmt(q: Fraction) -> str | int:
    return int(q) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def to_json(g: Pslg) -> dict:
    return {
        "vertices": [[_fmt(p.x), _fmt(p.y)] for p in g.vertices],
        "edges": [list(e) for e in g.sorted_edges()],
    }


def save(g: Pslg) -> str:
    return json.dumps(to_json(g))


def _coord(v, loc: str) -> Fraction:
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise PslgFormatError("coordinate must be an integer or a string", loc)
    try:
        return to_fraction(v)
    except (ValueError, ZeroDivisionError):
        raise PslgFormatError(f"non-numeric coordinate {v!r}", loc) from None


def from_json(doc) -> Pslg:
    if not isinstance(doc, dict):
        raise PslgFormatError("document must be an object with 'vertices' and 'edges'")
    if "vertices" not in doc:
        raise PslgFormatError("missing key", "vertices")
    verts_raw = doc["vertices"]
    if not isinstance(verts_raw, list):
        raise PslgFormatError("must be a list", "vertices")
    verts = []
    for i, v in enumerate(verts_raw):
        if not isinstance(v, list) or len(v) != 2:
            raise PslgFormatError("vertex must be a pair [x, y]", f"vertices[{i}]")
        verts.append(Point(_coord(v[0], f"vertices[{i}][0]"), _coord(v[1], f"vertices[{i}][1]")))
    edges_raw = doc.get("edges", [])
    if not isinstance(edges_raw, list):
        raise PslgFormatError("must be a list", "edges")
    n = len(verts)
    seen: set[Edge] = set()
    for k, e in enumerate(edges_raw):
        loc = f"edges[{k}]"
        if (not isinstance(e, list) or len(e) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)):
            raise PslgFormatError("edge must be a pair of integer indices", loc)
        i, j = e
        if not (0 <= i < n and 0 <= j < n):
            raise PslgFormatError(f"index out of range for {n} vertices", loc)
        if i == j:
            raise PslgFormatError("self-loop", loc)
        ne = _norm_edge(i, j)
        if ne in seen:
            raise PslgFormatError("duplicate edge", loc)
        seen.add(ne)
    return Pslg(verts, seen)


def load(text: str) -> Pslg:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PslgFormatError(f"invalid JSON ({exc.msg})", f"line {exc.lineno} column {exc.colno}") from None
    return from_json(doc)
