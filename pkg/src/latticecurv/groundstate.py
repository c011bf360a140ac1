"""Heitmann-Radin ground states on the triangular lattice.

Closed-shell growth, boundary peeling, an explicit minimizer builder and an
exhaustive search over lattice animals that serves as its oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from . import lattice
from .bondgraph import BondGraph, build_bond_graph, has_simple_boundary, perimeter
from .config import UNIT_RANGE, BondRange, Configuration, lattice_configuration
from .curvature import is_hard_sphere, negative_curvature_points
from .errors import (
    BoundaryNotSimpleError,
    BudgetExceededError,
    IdentityViolation,
    PreconditionError,
)
from .triangulation import defect_measure, triangulate

MAX_ORACLE_N = 12

# (nmax, radius) pairs already exhausted
_cached_runs: list[tuple[int, int]] = []


@dataclass(frozen=True)
class ShellDecomposition:
    """N = d_m + delta with d_m = 3m^2 + 3m + 1 <= N < d_{m+1}."""

    m: int
    delta: int
    d_m: int

    @property
    def n(self) -> int:
        return self.d_m + self.delta


def shell_decomposition(n: int) -> ShellDecomposition:
    if n < 1:
        raise ValueError("n must be >= 1")
    m = 0
    while lattice.hexagonal_number(m + 1) <= n:
        m += 1
    d_m = lattice.hexagonal_number(m)
    return ShellDecomposition(m, n - d_m, d_m)


def shell_count(p_prime: int, m: int) -> int:
    """Particles gained by m closed shells around a crystallized core of perimeter p_prime."""
    if m < 0 or p_prime < 0:
        raise ValueError("m and p_prime must be >= 0")
    return m * (p_prime + 3 * (m + 1))


def lattice_cells(X: Configuration) -> list[lattice.Cell]:
    cells = []
    for k, (x, y) in enumerate(X.points):
        c = lattice.to_cell(x, y, X.tol)
        if c is None:
            raise PreconditionError(f"point {k} is not a lattice point", index=k, point=[x, y])
        cells.append(c)
    return cells


def add_closed_shell(Xp: Configuration) -> Configuration:
    """Xp together with every lattice point at distance 1 from it.

    A single particle gets its six neighbours.  Otherwise Xp must have a
    simply closed boundary; the perimeter grows by at most 6, and by exactly
    6 when Xp has at most two points of negative curvature.
    """
    cells = lattice_cells(Xp)
    if not cells:
        raise PreconditionError("empty configuration")
    if len(cells) > 1:
        Gp = build_bond_graph(Xp, UNIT_RANGE)
        if not has_simple_boundary(Gp):
            raise BoundaryNotSimpleError("closed shells need a simply closed boundary")
    present = set(cells)
    shell = sorted({q for c in cells for q in lattice.neighbors(c)} - present)
    X = Configuration(Xp.points + tuple(lattice.to_xy(c) for c in shell), Xp.tol)
    if len(cells) > 1:
        p_old = perimeter(Gp)
        p_new = perimeter(build_bond_graph(X, UNIT_RANGE))
        n_neg = len(negative_curvature_points(triangulate(Gp)))
        if p_new > p_old + 6 or (n_neg <= 2 and p_new != p_old + 6):
            raise IdentityViolation(
                "closed shell perimeter bound fails",
                p_old=p_old,
                p_new=p_new,
                negative_points=n_neg,
            )
    return X


def remove_boundary(X: Configuration, bond_range: BondRange = UNIT_RANGE) -> Configuration:
    """Interior particles of X, in their original order."""
    if len(X) == 0:
        return X
    G = build_bond_graph(X, bond_range)
    return X.subset(G.interior_vertices)


def is_topologically_crystallized(G: BondGraph) -> bool:
    """mu = 0 and a simply closed boundary."""
    return has_simple_boundary(G) and defect_measure(triangulate(G)) == 0


# ------------------------------------------------------------------ builder


def minimizer_cells(n: int) -> list[lattice.Cell]:
    """Cells of the constructed N-particle minimizer.

    Take the largest hexagon H_m that fits and lay the remaining delta
    particles contiguously along the next ring, counterclockwise.  A full
    hexagon has no negative curvature and six straight sides of equal
    length, so the start is the outside joint neighbour of the first two
    particles of the side beginning at the lexicographically smallest corner
    (-m, 0), which is the cell (-m, -1).
    """
    dec = shell_decomposition(n)
    cells = lattice.hex_patch(dec.m)
    ring = lattice.hex_ring(dec.m + 1)
    # ring[0] is (-m-1, 0); ring[1] is (-m, -1)
    cells.extend(ring[1 : 1 + dec.delta])
    return cells


def build_minimizer(n: int) -> Configuration:
    if n < 1:
        raise ValueError("n must be >= 1")
    return lattice_configuration(minimizer_cells(n))


def max_bonds_formula(n: int) -> int:
    """floor(3n - sqrt(12n - 3)), the known maximal number of unit bonds."""
    # floor(3n - sqrt(s)) = 3n - ceil(sqrt(s))
    s = 12 * n - 3
    r = isqrt(s)
    return 3 * n - (r if r * r == s else r + 1)


# ------------------------------------------------------------------ oracle


def _in_half_plane(c: lattice.Cell) -> bool:
    return c[1] > 0 or (c[1] == 0 and c[0] >= 0)


@lru_cache(maxsize=None)
def _exhaust(nmax: int, radius: int) -> tuple[tuple[int, tuple], ...]:
    """For n = 1..nmax: (max bonds, fixed animals attaining it).

    Redelmeier's enumeration of fixed site animals rooted at the origin,
    where the root is the lowest cell in (j, i) order.
    """
    best = [-1] * (nmax + 1)
    argbest: list[list[frozenset]] = [[] for _ in range(nmax + 1)]
    cells: list[lattice.Cell] = []
    occupied: set = set()
    reached = {(0, 0)}
    dirs = lattice.DIRECTIONS

    def record(b: int) -> None:
        n = len(cells)
        if b > best[n]:
            best[n] = b
            argbest[n] = [frozenset(cells)]
        elif b == best[n]:
            argbest[n].append(frozenset(cells))

    def grow(untried: list, bonds: int) -> None:
        untried = list(untried)
        while untried:
            c = untried.pop()
            ci, cj = c
            b = bonds
            for di, dj in dirs:
                if (ci + di, cj + dj) in occupied:
                    b += 1
            cells.append(c)
            occupied.add(c)
            record(b)
            if len(cells) < nmax:
                new = []
                for di, dj in dirs:
                    q = (ci + di, cj + dj)
                    if q not in reached and _in_half_plane(q) and lattice.hex_norm(q) <= radius:
                        reached.add(q)
                        new.append(q)
                grow(untried + new, b)
                reached.difference_update(new)
            cells.pop()
            occupied.discard(c)

    grow([(0, 0)], 0)
    return tuple((best[n], tuple(argbest[n])) for n in range(1, nmax + 1))


def brute_force_min_lattice(n: int, radius: int | None = None) -> tuple[int, int]:
    """(minimal Heitmann-Radin energy, number of minimizing shapes up to symmetry).

    Searches every connected n-subset of the lattice whose cells lie within
    graph distance ``radius`` of its lowest cell (default n - 1, i.e. no
    restriction).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > MAX_ORACLE_N:
        raise BudgetExceededError(
            f"exhaustive search limited to n <= {MAX_ORACLE_N}", n=n, limit=MAX_ORACLE_N
        )
    radius = n - 1 if radius is None else radius
    if radius < 0:
        raise ValueError("radius must be >= 0")
    # a larger run is reusable when its radius clips size-n animals the same way
    for nmax, r in _cached_runs:
        if nmax >= n and min(r, n - 1) == min(radius, n - 1):
            table = _exhaust(nmax, r)
            break
    else:
        table = _exhaust(n, radius)
        _cached_runs.append((n, radius))
    bonds, animals = table[n - 1]
    if bonds < 0:
        raise PreconditionError("no animal of this size fits in the given radius",
                                n=n, radius=radius)
    classes = {lattice.canonical_form(a) for a in animals}
    return -bonds, len(classes)


# ------------------------------------------------------------------ lower bound


@dataclass
class RemovalReport:
    p: int
    mu: int
    p_inner: int
    mu_inner: int
    n_inner: int

    @property
    def lhs(self) -> int:
        return self.p + self.mu

    @property
    def rhs(self) -> int:
        return self.p_inner + self.mu_inner + 6

    @property
    def slack(self) -> int:
        return self.lhs - self.rhs

    @property
    def holds(self) -> bool:
        return self.slack >= 0

    @property
    def mu_equal(self) -> bool:
        return self.mu == self.mu_inner


def removal_inequality_check(X: Configuration) -> RemovalReport:
    """Compare P + mu before and after peeling off the boundary.

    Needs a hard-sphere configuration with simply closed boundary and at
    least one interior particle.  Raises ``IdentityViolation`` if the bound
    fails, or if it is tight while mu changes.
    """
    G = build_bond_graph(X, UNIT_RANGE)
    if not is_hard_sphere(G):
        raise PreconditionError("not a hard-sphere configuration")
    if not has_simple_boundary(G):
        raise BoundaryNotSimpleError("boundary is not a simply closed polygon")
    inner = G.interior_vertices
    if not inner:
        raise PreconditionError("configuration has no interior particles")
    Xi = X.subset(inner)
    Gi = build_bond_graph(Xi, UNIT_RANGE)
    rep = RemovalReport(
        p=perimeter(G),
        mu=defect_measure(triangulate(G)),
        p_inner=perimeter(Gi),
        mu_inner=defect_measure(triangulate(Gi)),
        n_inner=len(Xi),
    )
    if not rep.holds or (rep.slack == 0 and not rep.mu_equal):
        raise IdentityViolation(
            "boundary removal bound fails",
            lhs=rep.lhs,
            rhs=rep.rhs,
            mu=rep.mu,
            mu_inner=rep.mu_inner,
        )
    return rep
