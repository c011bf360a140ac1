"""Discrete curvature, bond-graph geometry and ground states of planar particle configurations."""

from .bondgraph import (
    BondGraph,
    EdgeClass,
    FaceWalk,
    build_bond_graph,
    euler_characteristic,
    has_simple_boundary,
    inner_perimeter,
    perimeter,
)
from .config import (
    UNIT_RANGE,
    BondRange,
    Configuration,
    generate_lattice_patch,
    generate_random_config,
    load_configuration,
    min_pairwise_distance,
    read_configuration,
    save_configuration,
)
from .curvature import (
    curvature_bound_check,
    euclidean_puiseux,
    gauss_bonnet_report,
    gromov_euler_curvatures,
    max_puiseux_curvature,
    puiseux_curvature,
)
from .energy import EnergyBreakdown, Potential, energy_decomposition, total_energy
from .errors import IdentityViolation, LatticeCurvError
from .groundstate import (
    add_closed_shell,
    brute_force_min_lattice,
    build_minimizer,
    removal_inequality_check,
    shell_count,
)
from .report import AnalysisReport, analyze
from .triangulation import EARCLIP, FAN, TriGraph, defect_measure, defect_measure_direct, triangulate

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "BondGraph",
    "BondRange",
    "Configuration",
    "EARCLIP",
    "EdgeClass",
    "EnergyBreakdown",
    "FAN",
    "FaceWalk",
    "IdentityViolation",
    "LatticeCurvError",
    "Potential",
    "TriGraph",
    "UNIT_RANGE",
    "add_closed_shell",
    "analyze",
    "brute_force_min_lattice",
    "build_bond_graph",
    "build_minimizer",
    "curvature_bound_check",
    "defect_measure",
    "defect_measure_direct",
    "energy_decomposition",
    "euclidean_puiseux",
    "euler_characteristic",
    "gauss_bonnet_report",
    "generate_lattice_patch",
    "generate_random_config",
    "gromov_euler_curvatures",
    "has_simple_boundary",
    "inner_perimeter",
    "load_configuration",
    "max_puiseux_curvature",
    "min_pairwise_distance",
    "perimeter",
    "puiseux_curvature",
    "read_configuration",
    "removal_inequality_check",
    "save_configuration",
    "shell_count",
    "total_energy",
    "triangulate",
]
