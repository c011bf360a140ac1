"""Named example configurations and seeded corpora for the invariant suites."""

from __future__ import annotations

import math
from collections.abc import Iterator

from scipy.optimize import brentq

from . import lattice
from .bondgraph import build_bond_graph, has_simple_boundary
from .config import (
    SplitMix64,
    Configuration,
    generate_lattice_patch,
    generate_random_config,
    lattice_configuration,
)

H = lattice.SQRT3_2


def _dedup(points, digits: int = 9) -> Configuration:
    seen = {}
    for x, y in points:
        seen.setdefault((round(x, digits) + 0.0, round(y, digits) + 0.0), (x, y))
    return Configuration(tuple(seen[k] for k in sorted(seen)))


# ---------------------------------------------------------------- small shapes


def unit_triangle() -> Configuration:
    return Configuration(((0.0, 0.0), (1.0, 0.0), (0.5, H)))


def unit_square() -> Configuration:
    return Configuration(((0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)))


def two_points(d: float = 1.0) -> Configuration:
    return Configuration(((0.0, 0.0), (d, 0.0)))


def unit_path(n: int) -> Configuration:
    """n points on a line at unit spacing: n - 1 outer wire edges."""
    return Configuration(tuple((float(k), 0.0) for k in range(n)))


def rhombus() -> Configuration:
    """Two unit triangles sharing an edge."""
    return Configuration(((0.0, 0.0), (1.0, 0.0), (0.5, H), (1.5, H)))


def two_triangles(gap: float = 3.0) -> Configuration:
    return Configuration(((0.0, 0.0), (1.0, 0.0), (0.5, H), (gap, 0.0), (gap + 1.0, 0.0), (gap + 0.5, H)))


def triangle_with_tail() -> Configuration:
    """Unit triangle with a two-edge outer wire attached at one corner."""
    return Configuration(((0.0, 0.0), (1.0, 0.0), (0.5, H), (2.0, 0.0), (3.0, 0.0)))


def _regular_polygon(k: int) -> list[tuple[float, float]]:
    r = 0.5 / math.sin(math.pi / k)
    return [(r * math.cos(2 * math.pi * t / k), r * math.sin(2 * math.pi * t / k)) for t in range(k)]


def pentagon_with_wire() -> Configuration:
    """Regular unit pentagon with a unit spur pointing inwards from vertex 0.

    The spur tip is closer than 1 to two pentagon vertices, so this is not a
    hard-sphere configuration.
    """
    pts = _regular_polygon(5)
    x0, y0 = pts[0]
    n = math.hypot(x0, y0)
    return Configuration(tuple(pts) + ((x0 - x0 / n, y0 - y0 / n),))


def heptagon_with_wire() -> Configuration:
    """Hard-sphere heptagon with an inner wire.

    The tip sits at the origin, its partner A at distance 1; the other six
    vertices lie at the common radius rho closing the unit heptagon.
    """

    def gap(rho):
        phi = math.acos(rho / 2.0)
        return 2 * phi + 10 * math.asin(1 / (2 * rho)) - 2 * math.pi

    rho = brentq(gap, 1.0001, 1.9, xtol=1e-15)
    phi = math.acos(rho / 2.0)
    step = 2 * math.asin(1 / (2 * rho))
    pts = [(0.0, 0.0), (0.0, -1.0)]  # tip, A
    for k in range(6):
        a = -math.pi / 2 + phi + k * step
        pts.append((rho * math.cos(a), rho * math.sin(a)))
    return Configuration(tuple(pts))


def ring_with_triangle(m: int = 3) -> Configuration:
    """The outer ring of H_m with a unit triangle at its centre.

    The ring's bounded walk contains the triangle, so it is not a face and
    the ring edges are outer wires.
    """
    cells = lattice.hex_ring(m) + [(0, 0), (1, 0), (0, 1)]
    return lattice_configuration(cells)


def hexagon_patch(m: int) -> Configuration:
    return generate_lattice_patch(m)


def square_grid(rows: int, cols: int | None = None) -> Configuration:
    cols = rows if cols is None else cols
    return Configuration(tuple((float(i), float(j)) for j in range(rows) for i in range(cols)))


def honeycomb_patch(rings: int = 1) -> Configuration:
    """Vertices of all hexagons whose centres lie in a triangular patch of the given radius."""
    s = math.sqrt(3.0)
    pts = []
    for c in lattice.hex_patch(rings):
        cx, cy = lattice.to_xy(c)
        cx, cy = s * cx, s * cy
        for k in range(6):
            a = math.pi / 6 + k * math.pi / 3
            pts.append((cx + math.cos(a), cy + math.sin(a)))
    return _dedup(pts)


def snub_patch() -> Configuration:
    """A 3.4.6.4 patch: one hexagon ringed by six squares and six triangles."""
    hexagon = [(math.cos(k * math.pi / 3), math.sin(k * math.pi / 3)) for k in range(6)]
    pts = list(hexagon)
    for k in range(6):
        # outward normal of the side from vertex k to k+1
        a = (k + 0.5) * math.pi / 3
        nx, ny = math.cos(a), math.sin(a)
        for v in (hexagon[k], hexagon[(k + 1) % 6]):
            pts.append((v[0] + nx, v[1] + ny))
    return _dedup(pts)


REMOVAL_EXAMPLE_CELLS = (
    (-3, 1), (-3, 2), (-2, -1), (-2, 0), (-2, 1), (-2, 2), (-2, 3), (-1, -2), (-1, -1),
    (-1, 0), (-1, 2), (-1, 3), (0, -3), (0, -2), (0, -1), (0, 0), (0, 1), (0, 2),
    (1, -3), (1, -2), (1, -1), (1, 0), (1, 1), (2, -3), (2, -2), (2, -1), (2, 0),
)
REMOVAL_EXAMPLE_CUT = -1


def sheared_lattice(cells, cut: int) -> Configuration:
    """Lattice cells where the triangle strip above row ``cut`` becomes a square strip."""
    lift = 1.0 - H
    pts = []
    for c in cells:
        x, y = lattice.to_xy(c)
        if c[1] > cut:
            x, y = x - 0.5, y + lift
        pts.append((x, y))
    return Configuration(tuple(pts))


def removal_example() -> Configuration:
    """Non-lattice hard-sphere configuration with P(X) = 16 and P(X minus its boundary) = 12.

    A lattice animal with one vacancy, sheared into a square strip between
    rows -1 and 0.  The perimeter drops by only 4 when the boundary is
    removed; the defect terms make up the difference.
    """
    return sheared_lattice(REMOVAL_EXAMPLE_CELLS, REMOVAL_EXAMPLE_CUT)


NAMED = {
    "triangle": unit_triangle,
    "square": unit_square,
    "two-points": two_points,
    "path4": lambda: unit_path(4),
    "rhombus": rhombus,
    "two-triangles": two_triangles,
    "triangle-tail": triangle_with_tail,
    "pentagon-wire": pentagon_with_wire,
    "heptagon-wire": heptagon_with_wire,
    "ring-triangle": ring_with_triangle,
    "H1": lambda: hexagon_patch(1),
    "H2": lambda: hexagon_patch(2),
    "H3": lambda: hexagon_patch(3),
    "square-grid": lambda: square_grid(5),
    "honeycomb": honeycomb_patch,
    "snub": snub_patch,
    "removal": removal_example,
}


def hand_built() -> dict[str, Configuration]:
    return {name: make() for name, make in NAMED.items()}


# ---------------------------------------------------------------- seeded corpora


def random_configs(count: int, seed: int, n_range=(2, 40), dmin: float = 0.75) -> Iterator[Configuration]:
    """Rejection-sampled configurations with d_min >= dmin."""
    rng = SplitMix64(seed)
    lo, hi = n_range
    for _ in range(count):
        n = lo + rng.randrange(hi - lo + 1)
        yield generate_random_config(n, rng.next_u64(), dmin)


def lattice_animal(rng: SplitMix64, n: int, vacancies: int = 0) -> list[lattice.Cell]:
    """Compact random lattice animal (growth favours well-bonded sites)."""
    cells = {(0, 0)}
    order = [(0, 0)]
    while len(cells) < n:
        frontier = sorted({q for c in order for q in lattice.neighbors(c) if q not in cells})
        weights = [sum(q2 in cells for q2 in lattice.neighbors(q)) ** 3 for q in frontier]
        pick = rng.uniform() * sum(weights)
        for q, w in zip(frontier, weights):
            pick -= w
            if pick < 0:
                break
        cells.add(q)
        order.append(q)
    full = [c for c in order if all(q in cells for q in lattice.neighbors(c))]
    for _ in range(min(vacancies, len(full))):
        c = full.pop(rng.randrange(len(full)))
        cells.discard(c)
        order.remove(c)
    return order


def lattice_corpus(count: int, seed: int, n_range=(3, 40), vacancy_rate: float = 0.3):
    """Random lattice animals (a fraction with vacancies); any boundary type."""
    rng = SplitMix64(seed)
    lo, hi = n_range
    for _ in range(count):
        n = lo + rng.randrange(hi - lo + 1)
        vac = 1 + rng.randrange(2) if rng.uniform() < vacancy_rate else 0
        yield lattice_configuration(lattice_animal(rng, n, vac))


def hard_sphere_corpus(count: int, seed: int, n_range=(3, 40)) -> list[Configuration]:
    """Hard-sphere configurations with simply closed boundary.

    Lattice animals (some with vacancies) and sheared variants with a square
    strip, keeping only those whose boundary is simply closed.
    """
    rng = SplitMix64(seed)
    out = []
    for X in lattice_corpus(count, rng.next_u64(), n_range):
        cells = [lattice.to_cell(x, y) for x, y in X.points]
        if rng.uniform() < 0.3:
            rows = sorted({c[1] for c in cells})
            if len(rows) > 1:
                X = sheared_lattice(cells, rows[rng.randrange(len(rows) - 1)])
        if has_simple_boundary(build_bond_graph(X)):
            out.append(X)
    return out


def unit_growth_config(rng: SplitMix64, n: int, dmin: float = 1.0) -> Configuration:
    """Grow a configuration whose bonds are exact unit distances, off the lattice.

    Each new point sits at distance 1 from one random earlier point (random
    direction) or from two earlier points (closing a unit triangle); points
    closer than ``dmin`` to anything are rejected.
    """
    pts = [(0.0, 0.0)]
    attempts = 0
    while len(pts) < n:
        attempts += 1
        if attempts > 1000 * n:
            break
        a = pts[rng.randrange(len(pts))]
        b = pts[rng.randrange(len(pts))]
        d = math.dist(a, b)
        if rng.uniform() < 0.6 and 1.0 < d < 2.0:
            mx, my = (a[0] + b[0]) / 2, (a[1] + b[1]) / 2
            h = math.sqrt(1.0 - d * d / 4.0) / d
            sign = 1 if rng.uniform() < 0.5 else -1
            q = (mx - sign * h * (b[1] - a[1]), my + sign * h * (b[0] - a[0]))
        else:
            t = 2 * math.pi * rng.uniform()
            q = (a[0] + math.cos(t), a[1] + math.sin(t))
        if all(math.dist(q, p) >= dmin - 1e-12 for p in pts):
            pts.append(q)
    return Configuration(tuple(pts))


def unit_corpus(count: int, seed: int, n_range=(2, 30)) -> Iterator[Configuration]:
    """Seeded hard-sphere configurations from :func:`unit_growth_config`."""
    rng = SplitMix64(seed)
    lo, hi = n_range
    for _ in range(count):
        yield unit_growth_config(rng, lo + rng.randrange(hi - lo + 1))


def jittered_lattice(rng: SplitMix64, n: int, amplitude: float = 0.08) -> Configuration:
    """Lattice animal with every point displaced by up to ``amplitude``."""
    pts = []
    for c in lattice_animal(rng, n):
        x, y = lattice.to_xy(c)
        pts.append((x + amplitude * (2 * rng.uniform() - 1), y + amplitude * (2 * rng.uniform() - 1)))
    return Configuration(tuple(pts))


def soft_corpus(count: int, seed: int, n_range=(2, 40)) -> Iterator[Configuration]:
    """Alternates rejection-sampled and jittered-lattice configurations."""
    rng = SplitMix64(seed)
    lo, hi = n_range
    for k in range(count):
        n = lo + rng.randrange(hi - lo + 1)
        if k % 2:
            yield jittered_lattice(rng, n)
        else:
            yield generate_random_config(n, rng.next_u64(), 0.75)
