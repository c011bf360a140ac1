"""Print the closed-shell minimizer energies next to the exhaustive oracle and the bond-count formula."""

from __future__ import annotations

import argparse

from latticecurv.bondgraph import build_bond_graph, perimeter
from latticecurv.energy import Potential, total_energy
from latticecurv.groundstate import MAX_ORACLE_N, brute_force_min_lattice, build_minimizer, max_bonds_formula


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nmax", type=int, default=30)
    ap.add_argument("--oracle", type=int, default=10, help="run the exhaustive search up to this N")
    args = ap.parse_args(argv)
    hr = Potential.heitmann_radin()
    print(f"{'N':>5} {'E':>7} {'P':>4} {'formula':>8} {'oracle':>7} {'shapes':>6}")
    for n in range(1, args.nmax + 1):
        X = build_minimizer(n)
        E = total_energy(X, hr)
        P = perimeter(build_bond_graph(X))
        oracle = shapes = ""
        if n <= min(args.oracle, MAX_ORACLE_N):
            oracle, shapes = brute_force_min_lattice(n)
        print(f"{n:>5} {E:>7g} {P:>4} {-max_bonds_formula(n):>8} {oracle!s:>7} {shapes!s:>6}")


if __name__ == "__main__":
    main()
