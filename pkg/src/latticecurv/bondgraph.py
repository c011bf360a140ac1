"""Bond graph of a configuration: edges, faces, edge classes, perimeter.

Faces come from the rotation system of the straight-line embedding.  Each
directed edge belongs to exactly one closed walk; per connected component
one walk has total turning -2pi (the outer walk), the others +2pi.  A
bounded walk is a face unless it encloses another component.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from scipy.spatial import cKDTree

from .config import UNIT_RANGE, BondRange, Configuration, min_pairwise_distance
from .errors import PlanarityError
from .geometry import signed_area, winding_number

Edge = tuple[int, int]


class EdgeClass(str, Enum):
    REGULAR_INTERIOR = "regular_interior"
    REGULAR_BOUNDARY = "regular_boundary"
    OUTER_WIRE = "outer_wire"
    INNER_WIRE = "inner_wire"

    @property
    def is_interior(self) -> bool:
        return self in (EdgeClass.REGULAR_INTERIOR, EdgeClass.INNER_WIRE)


@dataclass(frozen=True)
class FaceWalk:
    """Closed walk ``v0 -> v1 -> ... -> v0``; bounded faces run counterclockwise."""

    vertices: tuple[int, ...]
    signed_area: float
    turning: float = 2 * math.pi

    def __len__(self) -> int:
        return len(self.vertices)

    def directed_edges(self) -> list[Edge]:
        vs = self.vertices
        return [(vs[k], vs[(k + 1) % len(vs)]) for k in range(len(vs))]


@dataclass(frozen=True, eq=False)
class BondGraph:
    config: Configuration
    range: BondRange
    edges: tuple[Edge, ...]
    rotation: tuple[tuple[int, ...], ...]
    walks: tuple[FaceWalk, ...]
    walk_kind: tuple[str, ...]
    faces: tuple[FaceWalk, ...]
    edge_class: dict
    boundary_vertices: frozenset
    component: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.config)

    def degree(self, x: int) -> int:
        return len(self.rotation[x])

    def count(self, cls: EdgeClass) -> int:
        return sum(1 for c in self.edge_class.values() if c is cls)

    @property
    def n_components(self) -> int:
        return len(set(self.component))

    @property
    def interior_vertices(self) -> list[int]:
        return [x for x in range(self.n) if x not in self.boundary_vertices]

    def interior_degree(self, x: int) -> int:
        """Number of interior (regular interior or inner wire) edges at ``x``."""
        return sum(1 for y in self.rotation[x] if self.edge_class[_key(x, y)].is_interior)


def _key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


# ------------------------------------------------------------------ building


def check_planarity(X: Configuration, bond_range: BondRange) -> float | None:
    """Raise unless beta < sqrt(2) * d_min; returns d_min (None for N < 2)."""
    if len(X) < 2:
        return None
    dmin = min_pairwise_distance(X)
    if bond_range.beta + X.tol >= math.sqrt(2.0) * dmin:
        raise PlanarityError(
            f"beta={bond_range.beta!r} is not below sqrt(2)*d_min={math.sqrt(2.0) * dmin!r}",
            beta=bond_range.beta,
            d_min=dmin,
        )
    return dmin


def bond_pairs(X: Configuration, bond_range: BondRange) -> list[Edge]:
    if len(X) < 2:
        return []
    tree = cKDTree(X.array)
    pairs = tree.query_pairs(bond_range.beta + X.tol, output_type="ndarray")
    if not len(pairs):
        return []
    a = X.array
    d = ((a[pairs[:, 0]] - a[pairs[:, 1]]) ** 2).sum(axis=1) ** 0.5
    keep = d >= bond_range.alpha - X.tol
    return sorted((int(i), int(j)) for i, j in pairs[keep])


def rotation_system(X: Configuration, edges) -> list[list[int]]:
    """Neighbours of each vertex in counterclockwise angular order."""
    pts = X.points
    nbrs: list[list[int]] = [[] for _ in range(len(X))]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    for x, ys in enumerate(nbrs):
        px, py = pts[x]
        ys.sort(key=lambda y: (math.atan2(pts[y][1] - py, pts[y][0] - px), y))
    return nbrs


def _components(n: int, edges) -> list[int]:
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    return [find(x) for x in range(n)]


def _turning(pts, a: int, b: int, c: int) -> float:
    if a == c:
        # dead end: the walk goes round the tip with the spur on its right
        return -math.pi
    ux, uy = pts[b][0] - pts[a][0], pts[b][1] - pts[a][1]
    vx, vy = pts[c][0] - pts[b][0], pts[c][1] - pts[b][1]
    return math.atan2(ux * vy - uy * vx, ux * vx + uy * vy)


def trace_walks(X: Configuration, rotation) -> list[FaceWalk]:
    """All closed walks of the embedding.

    Successor of ``u -> v``: at ``v`` reverse the edge and take the next
    edge clockwise.  Bounded faces come out counterclockwise.
    """
    pts = X.points
    pos = [{y: k for k, y in enumerate(ys)} for ys in rotation]
    seen = set()
    walks = []
    for u0 in range(len(rotation)):
        for v0 in rotation[u0]:
            if (u0, v0) in seen:
                continue
            verts = []
            u, v = u0, v0
            while (u, v) not in seen:
                seen.add((u, v))
                verts.append(u)
                ring = rotation[v]
                w = ring[(pos[v][u] - 1) % len(ring)]
                u, v = v, w
            k = len(verts)
            turn = sum(_turning(pts, verts[i - 1], verts[i], verts[(i + 1) % k]) for i in range(k))
            walks.append(FaceWalk(tuple(verts), signed_area([pts[x] for x in verts]), turn))
    return walks


def _classify_walks(X: Configuration, walks, component) -> list[str]:
    """Label each walk 'face', 'outer', or 'enclosing' (bounded but not a face)."""
    pts = X.points
    reps: dict[int, int] = {}
    for x, c in enumerate(component):
        reps.setdefault(c, x)
    kinds = []
    for w in walks:
        if w.turning < 0:
            kinds.append("outer")
            continue
        comp = component[w.vertices[0]]
        poly = [pts[x] for x in w.vertices]
        xs = [p[0] for p in poly]
        ys = [p[1] for p in poly]
        lo_x, hi_x, lo_y, hi_y = min(xs), max(xs), min(ys), max(ys)
        kind = "face"
        for c, r in reps.items():
            if c == comp:
                continue
            px, py = pts[r]
            if lo_x < px < hi_x and lo_y < py < hi_y and winding_number(pts[r], poly) != 0:
                kind = "enclosing"
                break
        kinds.append(kind)
    return kinds


def _check_outer_walks(walks, kinds, component) -> None:
    per_comp: dict[int, int] = {}
    for w, k in zip(walks, kinds):
        if k == "outer":
            c = component[w.vertices[0]]
            per_comp[c] = per_comp.get(c, 0) + 1
    bad = {c: k for c, k in per_comp.items() if k != 1}
    if bad:
        raise PlanarityError("embedding is not planar: components with several outer walks",
                             components=sorted(bad))


def _edge_classes(edges, walks, kinds) -> dict:
    owner = {}
    for idx, w in enumerate(walks):
        for de in w.directed_edges():
            owner[de] = idx
    classes = {}
    for u, v in edges:
        a, b = owner[(u, v)], owner[(v, u)]
        fa, fb = kinds[a] == "face", kinds[b] == "face"
        if fa and fb:
            classes[(u, v)] = EdgeClass.INNER_WIRE if a == b else EdgeClass.REGULAR_INTERIOR
        elif fa or fb:
            classes[(u, v)] = EdgeClass.REGULAR_BOUNDARY
        else:
            classes[(u, v)] = EdgeClass.OUTER_WIRE
    return classes


def _boundary_vertices(n: int, edges, classes) -> frozenset:
    bd = set()
    touched = set()
    for (u, v) in edges:
        touched.add(u)
        touched.add(v)
        if not classes[(u, v)].is_interior:
            bd.add(u)
            bd.add(v)
    bd.update(x for x in range(n) if x not in touched)
    return frozenset(bd)


def build_bond_graph(X: Configuration, bond_range: BondRange = UNIT_RANGE) -> BondGraph:
    """Bond graph with faces, edge classes and boundary particles."""
    check_planarity(X, bond_range)
    edges = bond_pairs(X, bond_range)
    rot = rotation_system(X, edges)
    component = _components(len(X), edges)
    walks = trace_walks(X, rot)
    kinds = _classify_walks(X, walks, component)
    _check_outer_walks(walks, kinds, component)
    classes = _edge_classes(edges, walks, kinds)
    return BondGraph(
        config=X,
        range=bond_range,
        edges=tuple(edges),
        rotation=tuple(tuple(r) for r in rot),
        walks=tuple(walks),
        walk_kind=tuple(kinds),
        faces=tuple(w for w, k in zip(walks, kinds) if k == "face"),
        edge_class=classes,
        boundary_vertices=_boundary_vertices(len(X), edges, classes),
        component=tuple(component),
    )


# ------------------------------------------------------------------ queries


def enumerate_faces(G: BondGraph) -> list[FaceWalk]:
    """Faces recomputed from the edge set alone."""
    rot = rotation_system(G.config, G.edges)
    walks = trace_walks(G.config, rot)
    kinds = _classify_walks(G.config, walks, _components(G.n, G.edges))
    return [w for w, k in zip(walks, kinds) if k == "face"]


def classify_edges(G: BondGraph) -> dict:
    return _edge_classes(G.edges, G.walks, G.walk_kind)


def perimeter(G: BondGraph) -> int:
    return G.count(EdgeClass.REGULAR_BOUNDARY) + 2 * G.count(EdgeClass.OUTER_WIRE)


def inner_perimeter(f: FaceWalk) -> int:
    # the walk passes an inner wire twice, every other edge once
    return len(f.vertices)


def euler_characteristic(G: BondGraph) -> int:
    return G.n - len(G.edges) + len(G.faces)


def boundary_cycle(G: BondGraph) -> list[int] | None:
    """Boundary particles in counterclockwise order if the boundary is a simple
    closed polygon, else ``None``.

    Requires a connected graph on at least three particles without outer wire
    edges whose regular boundary edges form a single cycle through every
    boundary particle.  Inner wires are interior edges and are allowed.
    """
    if G.n < 3 or G.n_components != 1 or G.count(EdgeClass.OUTER_WIRE):
        return None
    face_halves = set()
    for f in G.faces:
        face_halves.update(f.directed_edges())
    succ: dict[int, int] = {}
    for (u, v), cls in G.edge_class.items():
        if cls is not EdgeClass.REGULAR_BOUNDARY:
            continue
        a, b = (u, v) if (u, v) in face_halves else (v, u)
        if a in succ:
            return None
        succ[a] = b
    if set(succ) != set(G.boundary_vertices):
        return None
    start = min(succ)
    cycle = [start]
    x = succ[start]
    while x != start:
        cycle.append(x)
        if len(cycle) > len(succ):
            return None
        x = succ[x]
    if len(cycle) != len(succ):
        return None
    return cycle


def has_simple_boundary(G: BondGraph) -> bool:
    return boundary_cycle(G) is not None
