"""Triangular lattice in axial coordinates.

A cell ``(i, j)`` sits at ``i*e + j*f`` with ``e = (1, 0)`` and
``f = (1/2, sqrt(3)/2)``.
"""

from __future__ import annotations

import math
from collections.abc import Iterable

SQRT3_2 = math.sqrt(3.0) / 2.0

Cell = tuple[int, int]

# counterclockwise, starting at e
DIRECTIONS: tuple[Cell, ...] = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))


def to_xy(cell: Cell) -> tuple[float, float]:
    i, j = cell
    return (i + 0.5 * j, SQRT3_2 * j)


def to_cell(x: float, y: float, tol: float = 1e-9) -> Cell | None:
    """Inverse of :func:`to_xy`; ``None`` when the point is off-lattice."""
    j = round(y / SQRT3_2)
    i = round(x - 0.5 * j)
    px, py = to_xy((i, j))
    if math.hypot(px - x, py - y) > tol:
        return None
    return (i, j)


def hex_norm(cell: Cell) -> int:
    """Graph distance from the origin in the lattice."""
    i, j = cell
    return max(abs(i), abs(j), abs(i + j))


def neighbors(cell: Cell) -> list[Cell]:
    i, j = cell
    return [(i + di, j + dj) for di, dj in DIRECTIONS]


def hex_ring(r: int) -> list[Cell]:
    """Cells at graph distance exactly ``r``, counterclockwise from ``(-r, 0)``."""
    if r == 0:
        return [(0, 0)]
    cells = []
    cell = (-r, 0)
    # -e corner -> -f corner is along e-f, then keep turning left
    for d in (5, 0, 1, 2, 3, 4):
        di, dj = DIRECTIONS[d]
        for _ in range(r):
            cells.append(cell)
            cell = (cell[0] + di, cell[1] + dj)
    return cells


def hex_patch(m: int) -> list[Cell]:
    """All cells within graph distance ``m``, ring by ring."""
    cells: list[Cell] = []
    for r in range(m + 1):
        cells.extend(hex_ring(r))
    return cells


def hexagonal_number(m: int) -> int:
    return 3 * m * m + 3 * m + 1


def rotate60(cell: Cell) -> Cell:
    i, j = cell
    return (-j, i + j)


def reflect(cell: Cell) -> Cell:
    # mirror in the x-axis: e -> e, f -> e - f
    i, j = cell
    return (i + j, -j)


def symmetry_images(cells: Iterable[Cell]) -> list[list[Cell]]:
    """The 12 images of a cell set under the point group of the lattice."""
    base = list(cells)
    out = []
    for mirrored in (base, [reflect(c) for c in base]):
        cur = mirrored
        for _ in range(6):
            out.append(cur)
            cur = [rotate60(c) for c in cur]
    return out


def canonical_form(cells: Iterable[Cell]) -> tuple[Cell, ...]:
    """Representative of the orbit under lattice symmetries and translations."""
    best = None
    for image in symmetry_images(cells):
        mi = min(c[0] for c in image)
        mj = min(c[1] for c in image)
        key = tuple(sorted((i - mi, j - mj) for i, j in image))
        if best is None or key < best:
            best = key
    return best
