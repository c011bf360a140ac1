"""Triangulated bond graph and the defect measure.

Faces are triangulated as weakly simple polygons: a face walk may visit a
particle more than once (inner wires).  A chord is admissible when it
joins two distinct particles not yet adjacent, leaves both endpoint
occurrences strictly inside their corner, and touches no other part of the
walk.  Chords that would close a separating triangle are avoided whenever
another admissible chord exists.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

from .bondgraph import BondGraph, Edge, FaceWalk
from .errors import TriangulationError
from .geometry import TWO_PI, point_on_segment, segments_touch, signed_area

EARCLIP = "earclip"
FAN = "fan"

_ANGLE_EPS = 1e-9


@dataclass(frozen=True, eq=False)
class TriGraph:
    base: BondGraph
    chords: tuple[Edge, ...]
    tri_faces: tuple[FaceWalk, ...]
    strategy: str = EARCLIP

    @property
    def n(self) -> int:
        return self.base.n

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(set(self.base.edges) | set(self.chords)))

    @cached_property
    def adjacency(self) -> tuple[frozenset, ...]:
        nbrs = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)


def _in_corner(pts, poly, i: int, target) -> bool:
    """Direction towards ``target`` lies strictly inside the corner of ``poly`` at ``i``."""
    n = len(poly)
    c = pts[poly[i]]
    prv = pts[poly[i - 1]]
    nxt = pts[poly[(i + 1) % n]]
    a_next = math.atan2(nxt[1] - c[1], nxt[0] - c[0])
    a_prev = math.atan2(prv[1] - c[1], prv[0] - c[0])
    a_t = math.atan2(target[1] - c[1], target[0] - c[0])
    span = (a_prev - a_next) % TWO_PI
    if span <= _ANGLE_EPS:
        span = TWO_PI  # tip of a spur: the face wraps all the way round
    rel = (a_t - a_next) % TWO_PI
    return _ANGLE_EPS < rel < span - _ANGLE_EPS


def _admissible(pts, poly, a: int, b: int, adj, tol: float) -> bool:
    n = len(poly)
    if (b - a) % n in (0, 1, n - 1):
        return False
    u, v = poly[a], poly[b]
    if u == v or v in adj[u]:
        return False
    pu, pv = pts[u], pts[v]
    if not (_in_corner(pts, poly, a, pv) and _in_corner(pts, poly, b, pu)):
        return False
    for k in range(n):
        q, r = poly[k], poly[(k + 1) % n]
        if q not in (u, v) and point_on_segment(pts[q], pu, pv, tol):
            return False
        if q in (u, v) or r in (u, v):
            continue
        if segments_touch(pu, pv, pts[q], pts[r], tol):
            return False
    return True


def _split(poly, a: int, b: int):
    if a > b:
        a, b = b, a
    return poly[a : b + 1], poly[b:] + poly[: a + 1]


def _closes_only_faces(poly, a: int, b: int, adj) -> bool:
    """Every triangle the chord closes is one of the two faces on its sides.

    A chord between two particles that already share a neighbour elsewhere
    would create a separating triangle, which breaks the sphere counts.
    """
    u, v = poly[a], poly[b]
    common = adj[u] & adj[v]
    if not common:
        return True
    apexes = {p[1] for p in _split(poly, a, b) if len(p) == 3}
    return common <= apexes


def _good(pts, poly, a, b, adj, tol, strict: bool) -> bool:
    return _admissible(pts, poly, a, b, adj, tol) and (
        not strict or _closes_only_faces(poly, a, b, adj)
    )


def _any_diagonal(pts, poly, adj, tol, order, strict: bool):
    n = len(poly)
    for a in order:
        for step in range(2, n - 1):
            b = (a + step) % n
            if _good(pts, poly, a, b, adj, tol, strict):
                return a, b
    return None


def _triangulate_face(pts, walk, adj, tol, strategy):
    """Chords and triangles for one face; ``adj`` is updated in place."""
    chords = []
    triangles = []
    stack = [list(walk)]
    while stack:
        poly = stack.pop()
        n = len(poly)
        if n == 3:
            triangles.append(tuple(poly))
            continue
        diag = None
        order = sorted(range(n), key=lambda k: (poly[k], k))
        for strict in (True, False):
            if strategy == EARCLIP:
                for i in range(n):
                    if _good(pts, poly, i - 1, (i + 1) % n, adj, tol, strict):
                        diag = ((i - 1) % n, (i + 1) % n)
                        break
            if diag is None:
                diag = _any_diagonal(pts, poly, adj, tol, order, strict)
            if diag is not None:
                break
        if diag is None:
            raise TriangulationError(
                "no admissible chord in face", walk=list(walk), remaining=list(poly)
            )
        u, v = poly[diag[0]], poly[diag[1]]
        adj[u].add(v)
        adj[v].add(u)
        chords.append((min(u, v), max(u, v)))
        stack.extend(_split(poly, *diag))
    return chords, triangles


def triangulate(G: BondGraph, strategy: str = EARCLIP) -> TriGraph:
    """Add k-3 non-crossing chords inside every face with walk length k.

    ``earclip`` clips the first ear found scanning the walk from its start;
    ``fan`` joins the lowest-index particle that admits a chord to the first
    admissible partner along the walk, which is a plain fan on convex faces.
    """
    if strategy not in (EARCLIP, FAN):
        raise ValueError(f"unknown strategy {strategy!r}")
    pts = G.config.points
    adj = [set(r) for r in G.rotation]
    chords: list[Edge] = []
    tris: list[FaceWalk] = []
    for f in G.faces:
        if len(f) == 3:
            tris.append(f)
            continue
        c, t = _triangulate_face(pts, f.vertices, adj, G.config.tol, strategy)
        if len(c) != len(f) - 3:
            raise TriangulationError("wrong chord count", walk=list(f.vertices), chords=c)
        chords.extend(c)
        tris.extend(FaceWalk(tri, signed_area([pts[x] for x in tri])) for tri in t)
    return TriGraph(G, tuple(chords), tuple(tris), strategy)


def defect_measure(T: TriGraph) -> int:
    return len(T.chords)


def defect_measure_direct(G: BondGraph) -> int:
    """Sum over faces of (inner perimeter - 3); needs no triangulation."""
    return sum(len(f) - 3 for f in G.faces)


def validate_trigraph(T: TriGraph) -> None:
    """Check the structural invariants of a triangulation (quadratic in edges)."""
    G = T.base
    pts = G.config.points
    tol = G.config.tol
    if len(T.chords) != defect_measure_direct(G):
        raise TriangulationError("chord count differs from sum of (k - 3)")
    if len(set(T.chords)) != len(T.chords) or set(T.chords) & set(G.edges):
        raise TriangulationError("chord duplicates an existing edge")
    for f in T.tri_faces:
        if len(f) != 3 or f.signed_area <= 0:
            raise TriangulationError("non-triangular or degenerate face", walk=list(f.vertices))
    all_edges = list(T.edges)
    for u, v in T.chords:
        for q, r in all_edges:
            if {q, r} & {u, v}:
                continue
            if segments_touch(pts[u], pts[v], pts[q], pts[r], tol):
                raise TriangulationError("chord crosses an edge", chord=[u, v], edge=[q, r])
