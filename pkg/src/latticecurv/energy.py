"""Pair potentials and the geometric energy decomposition.

    E = -3N + P + 3 chi + mu + E_elastic + E_nonbond

holds exactly for any configuration whose bond range keeps the bond graph
planar, and any potential with minimum -1 at r = 1.
"""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree
from scipy.spatial.distance import pdist

from .bondgraph import BondGraph, build_bond_graph, euler_characteristic, perimeter
from .config import DEFAULT_TOL, UNIT_RANGE, BondRange, Configuration, min_pairwise_distance
from .errors import BondRangeError, IdentityViolation, PreconditionError
from .triangulation import defect_measure, triangulate

INF = math.inf
DEFAULT_SOFT_RANGE = BondRange(0.8, 1.2)


@dataclass(frozen=True)
class Potential:
    """``kind`` is ``"hr"``, ``"lj"`` or ``"custom"``."""

    kind: str
    p: float | None = None
    func: Callable[[np.ndarray], np.ndarray] | None = None
    tol: float = DEFAULT_TOL

    @classmethod
    def heitmann_radin(cls, tol: float = DEFAULT_TOL) -> Potential:
        return cls("hr", tol=tol)

    @classmethod
    def lennard_jones(cls, p: float = 6.0) -> Potential:
        if not p > 0:
            raise ValueError("Lennard-Jones exponent must be positive")
        return cls("lj", p=float(p))

    @classmethod
    def custom(cls, func) -> Potential:
        """Vectorised ``func(r)``; must have minimum value -1 at r = 1."""
        pot = cls("custom", func=func)
        if abs(float(pot.values(np.array([1.0]))[0]) + 1.0) > 1e-12:
            raise ValueError("custom potential must equal -1 at r = 1")
        return pot

    @classmethod
    def from_table(cls, r, v) -> Potential:
        """Piecewise-linear potential through ``(r, v)``, constant beyond the table."""
        r = np.asarray(r, dtype=float)
        v = np.asarray(v, dtype=float)
        return cls.custom(lambda x: np.interp(x, r, v))

    @property
    def name(self) -> str:
        if self.kind == "lj":
            return f"lj(p={self.p:g})"
        return self.kind

    def values(self, r: np.ndarray) -> np.ndarray:
        r = np.asarray(r, dtype=float)
        if np.any(r <= 0):
            raise PreconditionError("potential evaluated at r <= 0")
        if self.kind == "hr":
            out = np.zeros_like(r)
            out[np.abs(r - 1.0) <= self.tol] = -1.0
            out[r < 1.0 - self.tol] = INF
            return out
        if self.kind == "lj":
            rp = r ** (-self.p)
            return rp * rp - 2.0 * rp
        return np.asarray(self.func(r), dtype=float)

    def __call__(self, r: float) -> float:
        return potential_eval(self, r)


def potential_eval(V: Potential, r: float) -> float:
    if not r > 0:
        raise PreconditionError(f"potential evaluated at r={r!r}", r=r)
    return float(V.values(np.array([float(r)]))[0])


def _pairs(X: Configuration, cutoff: float | None = None):
    """(i, j, d) arrays over unordered pairs, optionally restricted to d <= cutoff."""
    n = len(X)
    if n < 2:
        e = np.empty(0, dtype=int)
        return e, e, np.empty(0)
    if cutoff is None:
        i, j = np.triu_indices(n, 1)
        return i, j, pdist(X.array)
    pairs = cKDTree(X.array).query_pairs(cutoff, output_type="ndarray")
    if not len(pairs):
        e = np.empty(0, dtype=int)
        return e, e, np.empty(0)
    i, j = pairs[:, 0], pairs[:, 1]
    d = np.sqrt(((X.array[i] - X.array[j]) ** 2).sum(axis=1))
    return i, j, d


def _sum(values: np.ndarray) -> float:
    if np.any(np.isposinf(values)):
        return INF
    return math.fsum(values.tolist())


def total_energy(X: Configuration, V: Potential) -> float:
    """Sum of V over unordered pairs; +inf propagates."""
    if V.kind == "hr":
        # pairs beyond 1 + tol contribute nothing
        _, _, d = _pairs(X, 1.0 + V.tol)
    else:
        _, _, d = _pairs(X)
    return _sum(V.values(d)) if len(d) else 0.0


def _bond_mask(d: np.ndarray, bond_range: BondRange, tol: float) -> np.ndarray:
    return (d >= bond_range.alpha - tol) & (d <= bond_range.beta + tol)


def elastic_energy(X: Configuration, V: Potential, bond_range: BondRange) -> float:
    """Sum over bonded pairs of V(r) - min V = V(r) + 1."""
    _, _, d = _pairs(X, bond_range.beta + X.tol)
    d = d[_bond_mask(d, bond_range, X.tol)]
    return _sum(V.values(d) + 1.0) if len(d) else 0.0


def nonbond_energy(X: Configuration, V: Potential, bond_range: BondRange) -> float:
    """Sum of V over pairs whose distance lies outside the bond range."""
    if V.kind == "hr":
        _, _, d = _pairs(X, 1.0 + V.tol)
    else:
        _, _, d = _pairs(X)
    d = d[~_bond_mask(d, bond_range, X.tol)]
    return _sum(V.values(d)) if len(d) else 0.0


def default_bond_range(X: Configuration, V: Potential) -> BondRange:
    """[1, 1] for Heitmann-Radin; otherwise [0.8, 1.2] with beta clipped for planarity."""
    if V.kind == "hr":
        return UNIT_RANGE
    if len(X) < 2:
        return DEFAULT_SOFT_RANGE
    limit = math.sqrt(2.0) * min_pairwise_distance(X) - 2.0 * X.tol
    if limit < 1.0:
        raise BondRangeError("d_min too small for any planar bond range",
                             d_min=min_pairwise_distance(X))
    return BondRange(DEFAULT_SOFT_RANGE.alpha, min(DEFAULT_SOFT_RANGE.beta, limit))


@dataclass
class EnergyBreakdown:
    n: int
    total: float
    bulk: int  # -3N
    perimeter: int
    euler: int  # 3 chi
    defect: int  # mu
    elastic: float
    nonbond: float
    residual: float | None
    bond_range: BondRange
    potential: str

    @property
    def finite(self) -> bool:
        return math.isfinite(self.total)

    @property
    def chi(self) -> int:
        return self.euler // 3

    def terms(self) -> float:
        return self.bulk + self.perimeter + self.euler + self.defect + self.elastic + self.nonbond


def residual_bound(total: float) -> float:
    return 1e-9 * (1.0 + abs(total))


def energy_decomposition(
    X: Configuration,
    V: Potential,
    bond_range: BondRange | None = None,
    graph: BondGraph | None = None,
) -> EnergyBreakdown:
    """Direct pair-sum energy next to the six geometric terms.

    Raises ``IdentityViolation`` when the residual exceeds 1e-9 (1 + |E|), or
    is non-zero for Heitmann-Radin.  With an infinite Heitmann-Radin energy
    the breakdown is returned without a residual.
    """
    if bond_range is None:
        bond_range = graph.range if graph is not None else default_bond_range(X, V)
    if V.kind == "hr" and (bond_range.alpha != 1.0 or bond_range.beta != 1.0):
        raise BondRangeError("Heitmann-Radin needs the bond range [1, 1]",
                             alpha=bond_range.alpha, beta=bond_range.beta)
    G = graph if graph is not None else build_bond_graph(X, bond_range)
    T = triangulate(G)
    total = total_energy(X, V)
    br = EnergyBreakdown(
        n=len(X),
        total=total,
        bulk=-3 * len(X),
        perimeter=perimeter(G),
        euler=3 * euler_characteristic(G),
        defect=defect_measure(T),
        elastic=elastic_energy(X, V, bond_range),
        nonbond=nonbond_energy(X, V, bond_range),
        residual=None,
        bond_range=bond_range,
        potential=V.name,
    )
    if not br.finite:
        return br
    br.residual = total - br.terms()
    limit = 0.0 if V.kind == "hr" else residual_bound(total)
    if abs(br.residual) > limit:
        raise IdentityViolation(
            "energy decomposition residual out of bounds",
            residual=br.residual,
            total=total,
            limit=limit,
        )
    return br
