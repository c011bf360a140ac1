"""Full analysis pipeline and its JSON report (schema version 1)."""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .bondgraph import build_bond_graph, euler_characteristic, inner_perimeter, perimeter
from .config import BondRange, Configuration
from .curvature import CurvatureProfile, gauss_bonnet_report
from .energy import EnergyBreakdown, Potential, default_bond_range, energy_decomposition, total_energy
from .errors import PlanarityError
from .triangulation import EARCLIP, defect_measure, triangulate

SCHEMA_VERSION = 1


def _real(x: float):
    """JSON value for a real: shortest round-trip float, or the string "infinity"."""
    if math.isinf(x):
        return "infinity" if x > 0 else "-infinity"
    return x


def _frac(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def energy_dict(br: EnergyBreakdown) -> dict:
    return {
        "potential": br.potential,
        "total": _real(br.total),
        "finite": br.finite,
        "bulk": br.bulk,
        "perimeter": br.perimeter,
        "euler": br.euler,
        "defect": br.defect,
        "elastic": _real(br.elastic),
        "nonbond": _real(br.nonbond),
        "residual": br.residual,
        "bond_range": [br.bond_range.alpha, br.bond_range.beta],
    }


def _curvature_dict(prof: CurvatureProfile) -> dict:
    boundary = None
    if prof.max_puiseux is not None:
        boundary = [
            {"vertex": x, "k_max": prof.max_puiseux[x], "k_eu": prof.euclidean_puiseux[x]}
            for x in sorted(prof.max_puiseux)
        ]
    return {
        "puiseux": prof.puiseux,
        "euler_like": prof.euler_like,
        "gromov": [_frac(q) for q in prof.gromov],
        "euler": [_frac(q) for q in prof.euler],
        "boundary": boundary,
    }


@dataclass
class AnalysisReport:
    n: int
    bond_range: list
    edges: list
    faces: list
    perimeter: int | None
    chi: int | None
    mu: int | None
    boundary_vertices: list
    triangulation_chords: list
    curvature: dict | None
    gauss_bonnet: dict | None
    energy: dict
    config: dict
    v: int = SCHEMA_VERSION
    strategy: str = EARCLIP
    handshake: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> AnalysisReport:
        return cls(**json.loads(text))

    def to_text(self) -> str:
        gb = self.gauss_bonnet
        en = self.energy
        if gb is None:
            return (
                f"N = {self.n}   bond range = [{self.bond_range[0]}, {self.bond_range[1]}]\n"
                f"bond graph not planar at this range; geometry skipped\n"
                f"energy ({en['potential']}) = {en['total']}\n"
            )
        lines = [
            f"N = {self.n}   bond range = [{self.bond_range[0]}, {self.bond_range[1]}]",
            f"edges = {len(self.edges)}   faces = {len(self.faces)}   boundary particles = {len(self.boundary_vertices)}",
            f"P = {self.perimeter}   chi = {self.chi}   mu = {self.mu}",
            f"sum K = {gb['lhs']}   6 chi + 3 (P - #boundary) = {gb['rhs']}   ok = {gb['ok']}",
            f"energy ({en['potential']}) = {en['total']}",
        ]
        if en["finite"]:
            lines.append(
                f"  = {en['bulk']} + {en['perimeter']} + {en['euler']} + {en['defect']}"
                f" + {en['elastic']!r} + {en['nonbond']!r}   residual = {en['residual']!r}"
            )
        return "\n".join(lines) + "\n"


def analyze(
    X: Configuration,
    potential: Potential | None = None,
    bond_range: BondRange | None = None,
    strategy: str = EARCLIP,
) -> AnalysisReport:
    """Bond graph, faces, triangulation, curvatures and energy decomposition.

    Overlapping hard spheres have infinite energy and, typically, no planar
    bond graph; the report then carries the energy only.
    """
    potential = potential or Potential.heitmann_radin()
    if bond_range is None:
        bond_range = default_bond_range(X, potential)
    try:
        G = build_bond_graph(X, bond_range)
    except PlanarityError:
        total = total_energy(X, potential)
        if not math.isinf(total):
            raise
        return _energy_only(X, potential, bond_range, total, strategy)
    T = triangulate(G, strategy)
    prof = gauss_bonnet_report(T)
    br = energy_decomposition(X, potential, bond_range, graph=G)
    return AnalysisReport(
        n=len(X),
        bond_range=[bond_range.alpha, bond_range.beta],
        edges=[[u, v, G.edge_class[(u, v)].value] for u, v in G.edges],
        faces=[
            {"walk": list(f.vertices), "inner_perimeter": inner_perimeter(f), "area": f.signed_area}
            for f in G.faces
        ],
        perimeter=perimeter(G),
        chi=euler_characteristic(G),
        mu=defect_measure(T),
        boundary_vertices=sorted(G.boundary_vertices),
        triangulation_chords=[list(c) for c in T.chords],
        curvature=_curvature_dict(prof),
        gauss_bonnet={
            "lhs": prof.sum_puiseux,
            "rhs": prof.six_chi + prof.boundary_term,
            "six_chi": prof.six_chi,
            "boundary_term": prof.boundary_term,
            "ok": prof.gauss_bonnet_holds,
        },
        energy=energy_dict(br),
        config={"points": [list(p) for p in X.points], "tol": X.tol},
        strategy=strategy,
        handshake={k: list(v) for k, v in prof.handshake.items()},
    )


def _energy_only(X, potential, bond_range, total, strategy) -> AnalysisReport:
    br = EnergyBreakdown(
        n=len(X), total=total, bulk=-3 * len(X), perimeter=None, euler=None, defect=None,
        elastic=math.inf, nonbond=math.inf, residual=None, bond_range=bond_range,
        potential=potential.name,
    )
    return AnalysisReport(
        n=len(X),
        bond_range=[bond_range.alpha, bond_range.beta],
        edges=[], faces=[], perimeter=None, chi=None, mu=None,
        boundary_vertices=[], triangulation_chords=[],
        curvature=None, gauss_bonnet=None,
        energy=energy_dict(br),
        config={"points": [list(p) for p in X.points], "tol": X.tol},
        strategy=strategy,
    )
