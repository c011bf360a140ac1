"""Search for a hard-sphere configuration X with P(X) = 16 and P(X minus its boundary) = 12.

Random compact lattice animals with one or two vacancies are generated;
hits are then made non-lattice by turning the triangle strip between two
consecutive rows into a square strip (everything above the cut is shifted
by half a spacing and lifted to unit height).  Prints the first hits.
"""

from __future__ import annotations

import argparse
import math
import random

from latticecurv import lattice
from latticecurv.bondgraph import build_bond_graph, has_simple_boundary, perimeter
from latticecurv.config import Configuration, lattice_configuration
from latticecurv.triangulation import defect_measure, triangulate

TARGET = (16, 12)


def random_animal(rng: random.Random, n: int) -> set:
    cells = {(0, 0)}
    while len(cells) < n:
        frontier = [q for c in cells for q in lattice.neighbors(c) if q not in cells]
        weights = [sum(q2 in cells for q2 in lattice.neighbors(q)) ** 3 for q in frontier]
        cells.add(rng.choices(frontier, weights)[0])
    return cells


def sheared(cells, cut: int) -> Configuration:
    """Rows above ``cut`` sit on a square strip instead of a triangle strip."""
    lift = 1.0 - lattice.SQRT3_2
    pts = []
    for c in cells:
        x, y = lattice.to_xy(c)
        if c[1] > cut:
            x, y = x - 0.5, y + lift
        pts.append((x, y))
    return Configuration(tuple(pts))


def perimeters(X: Configuration):
    G = build_bond_graph(X)
    if not has_simple_boundary(G):
        return None
    inner = G.interior_vertices
    if not inner:
        return None
    Gi = build_bond_graph(X.subset(inner))
    return G, Gi


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--trials", type=int, default=4000)
    ap.add_argument("--hits", type=int, default=3)
    args = ap.parse_args(argv)
    rng = random.Random(args.seed)
    hits = 0
    for _ in range(args.trials):
        cells = random_animal(rng, rng.randint(20, 34))
        inner = sorted(c for c in cells if all(q in cells for q in lattice.neighbors(c)))
        for _ in range(rng.randint(1, 2)):
            if inner:
                cells.discard(inner.pop(rng.randrange(len(inner))))
        cells = sorted(cells)
        res = perimeters(lattice_configuration(cells))
        if res is None or (perimeter(res[0]), perimeter(res[1])) != TARGET:
            continue
        rows = sorted({c[1] for c in cells})
        for cut in rows[:-1]:
            X = sheared(cells, cut)
            res = perimeters(X)
            if res is None or (perimeter(res[0]), perimeter(res[1])) != TARGET:
                continue
            G, Gi = res
            print(
                f"cells={cells} cut={cut} n={len(X)} "
                f"mu={defect_measure(triangulate(G))} "
                f"mu_inner={defect_measure(triangulate(Gi))} "
                f"inner_simple={has_simple_boundary(Gi)} "
                f"d_min={min(math.dist(p, q) for i, p in enumerate(X.points) for q in X.points[:i]):.6f}"
            )
            hits += 1
            if hits >= args.hits:
                return


if __name__ == "__main__":
    main()
