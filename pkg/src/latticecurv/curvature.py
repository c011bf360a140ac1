"""Discrete curvatures and the discrete Gauss-Bonnet identity.

Conventions: ``S(x)`` is the graph-metric unit sphere of ``x`` in the
triangulated bond graph; V1(x) counts its edges and V2(x) the triangles
incident to ``x``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .bondgraph import (
    BondGraph,
    boundary_cycle,
    euler_characteristic,
    perimeter,
)
from .config import min_pairwise_distance
from .errors import BoundaryNotSimpleError, IdentityViolation, PreconditionError
from .geometry import TWO_PI
from .triangulation import TriGraph

LATTICE_SPHERE = 6  # graph length of the unit sphere in the triangular lattice


def sphere_counts(T: TriGraph) -> tuple[list[int], list[int], list[int]]:
    """(V0, V1, V2) per vertex."""
    adj = T.adjacency
    v1 = [0] * T.n
    for y, z in T.edges:
        for x in adj[y] & adj[z]:
            v1[x] += 1
    v2 = [0] * T.n
    for f in T.tri_faces:
        for x in f.vertices:
            v2[x] += 1
    return [1] * T.n, v1, v2


def puiseux_curvature(T: TriGraph) -> list[int]:
    """K(x) = 6 - |S1(x)| inside, 3 - |S1(x)| on the boundary."""
    _, v1, _ = sphere_counts(T)
    bd = T.base.boundary_vertices
    return [(3 if x in bd else 6) - v1[x] for x in range(T.n)]


def euler_like_curvature(T: TriGraph) -> list[int]:
    """6 (V0 - V1/2 + V2/3), integer-valued."""
    v0, v1, v2 = sphere_counts(T)
    return [6 * a - 3 * b + 2 * c for a, b, c in zip(v0, v1, v2)]


def face_corners(G: BondGraph) -> list[list[int]]:
    """For each vertex, the lengths of the faces it is a corner of (with repeats)."""
    corners: list[list[int]] = [[] for _ in range(G.n)]
    for f in G.faces:
        for x in f.vertices:
            corners[x].append(len(f))
    return corners


def gromov_euler_curvatures(G: BondGraph, x: int, corners=None) -> tuple[Fraction, Fraction]:
    """Exact (Gromov, Euler) curvature of the untriangulated graph at ``x``.

    Gromov: 1 - deg/2 + sum over face corners at x of 1/(face length).
    Euler:  1 - deg/2 + (number of face corners at x)/3.
    """
    at_x = (corners or face_corners(G))[x]
    base = Fraction(1) - Fraction(G.degree(x), 2)
    gromov = base + sum((Fraction(1, k) for k in at_x), Fraction(0))
    euler = base + Fraction(len(at_x), 3)
    return gromov, euler


def _require_simple(G: BondGraph) -> list[int]:
    cycle = boundary_cycle(G)
    if cycle is None:
        raise BoundaryNotSimpleError("boundary is not a simple closed polygon")
    return cycle


def max_puiseux_curvature(G: BondGraph, x: int) -> int:
    """2 - i(x), i(x) the number of interior edges of the bond graph at ``x``."""
    _require_simple(G)
    if x not in G.boundary_vertices:
        raise PreconditionError(f"vertex {x} is not a boundary particle", vertex=x)
    return 2 - G.interior_degree(x)


def inner_angles(G: BondGraph) -> dict[int, float]:
    """Interior angle at each boundary particle of a simply bounded graph."""
    cycle = _require_simple(G)
    pts = G.config.points
    out = {}
    m = len(cycle)
    for k, x in enumerate(cycle):
        p, n = pts[cycle[k - 1]], pts[cycle[(k + 1) % m]]
        c = pts[x]
        a_next = math.atan2(n[1] - c[1], n[0] - c[0])
        a_prev = math.atan2(p[1] - c[1], p[0] - c[0])
        out[x] = (a_prev - a_next) % TWO_PI
    return out


def euclidean_puiseux(G: BondGraph, x: int) -> float:
    """pi minus the interior angle of the boundary polygon at ``x``."""
    angles = inner_angles(G)
    if x not in angles:
        raise PreconditionError(f"vertex {x} is not a boundary particle", vertex=x)
    return math.pi - angles[x]


@dataclass
class CurvatureBound:
    vertex: int
    interior_edges: int
    k_max: int
    k_eu: float
    angle: float
    slack: float  # K_max/6 - K_eu/(2 pi)
    angle_slack: float  # alpha - (i + 1) pi / 3

    @property
    def holds(self) -> bool:
        return self.slack >= -1e-9 and self.angle_slack >= -1e-9


def is_hard_sphere(G: BondGraph) -> bool:
    X = G.config
    if G.range.alpha != 1.0 or G.range.beta != 1.0:
        return False
    return len(X) < 2 or min_pairwise_distance(X) >= 1.0 - X.tol


def curvature_bound_check(G: BondGraph) -> list[CurvatureBound]:
    """Per boundary particle: K_max/6 >= K_eu/(2 pi) and alpha >= (i+1) pi/3."""
    if not is_hard_sphere(G):
        raise PreconditionError("not a hard-sphere configuration with unit bond range")
    angles = inner_angles(G)
    out = []
    for x in boundary_cycle(G):
        i = G.interior_degree(x)
        k_max = 2 - i
        k_eu = math.pi - angles[x]
        out.append(
            CurvatureBound(
                vertex=x,
                interior_edges=i,
                k_max=k_max,
                k_eu=k_eu,
                angle=angles[x],
                slack=k_max / LATTICE_SPHERE - k_eu / TWO_PI,
                angle_slack=angles[x] - (i + 1) * math.pi / 3,
            )
        )
    return out


@dataclass
class CurvatureProfile:
    puiseux: list[int]
    euler_like: list[int]
    gromov: list[Fraction]
    euler: list[Fraction]
    max_puiseux: dict[int, int] | None
    euclidean_puiseux: dict[int, float] | None
    sum_puiseux: int
    six_chi: int
    boundary_term: int  # 3 (P - #boundary)
    chi: int
    perimeter: int
    n_boundary: int
    handshake: dict = field(default_factory=dict)

    @property
    def gauss_bonnet_holds(self) -> bool:
        return self.sum_puiseux == self.six_chi + self.boundary_term


def handshake_sums(T: TriGraph) -> dict:
    """Both sides of the three handshake identities."""
    v0, v1, v2 = sphere_counts(T)
    P = perimeter(T.base)
    return {
        "v0": (sum(v0), T.n),
        "v1": (sum(v1), 2 * len(T.edges) - P),
        "v2": (sum(v2), 3 * len(T.tri_faces)),
    }


def gauss_bonnet_report(T: TriGraph) -> CurvatureProfile:
    """All curvatures of ``T``; raises if Gauss-Bonnet or a handshake fails."""
    G = T.base
    hs = handshake_sums(T)
    for name, (lhs, rhs) in hs.items():
        if lhs != rhs:
            raise IdentityViolation(f"handshake {name} fails", lhs=lhs, rhs=rhs)
    K = puiseux_curvature(T)
    Kt = euler_like_curvature(T)
    chi = euler_characteristic(G)
    P = perimeter(G)
    nb = len(G.boundary_vertices)
    corners = face_corners(G)
    ge = [gromov_euler_curvatures(G, x, corners) for x in range(G.n)]
    k_max = k_eu = None
    if boundary_cycle(G) is not None:
        angles = inner_angles(G)
        k_max = {x: 2 - G.interior_degree(x) for x in angles}
        k_eu = {x: math.pi - a for x, a in angles.items()}
    profile = CurvatureProfile(
        puiseux=K,
        euler_like=Kt,
        gromov=[g for g, _ in ge],
        euler=[e for _, e in ge],
        max_puiseux=k_max,
        euclidean_puiseux=k_eu,
        sum_puiseux=sum(K),
        six_chi=6 * chi,
        boundary_term=3 * (P - nb),
        chi=chi,
        perimeter=P,
        n_boundary=nb,
        handshake=hs,
    )
    if not profile.gauss_bonnet_holds:
        raise IdentityViolation(
            "discrete Gauss-Bonnet fails",
            lhs=profile.sum_puiseux,
            rhs=profile.six_chi + profile.boundary_term,
        )
    return profile


def negative_curvature_points(T: TriGraph) -> list[int]:
    return [x for x, k in enumerate(puiseux_curvature(T)) if k < 0]

