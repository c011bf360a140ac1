"""Invariant suites run over generated corpora (backs ``latticecurv verify``)."""

from __future__ import annotations

from collections.abc import Callable, Iterator
from dataclasses import dataclass, field

from . import corpus
from .bondgraph import build_bond_graph, perimeter
from .config import Configuration, generate_lattice_patch
from .curvature import gauss_bonnet_report, negative_curvature_points
from .energy import Potential, energy_decomposition, residual_bound
from .errors import LatticeCurvError
from .groundstate import (
    MAX_ORACLE_N,
    add_closed_shell,
    brute_force_min_lattice,
    build_minimizer,
    is_topologically_crystallized,
    removal_inequality_check,
    shell_count,
)
from .triangulation import EARCLIP, FAN, defect_measure, defect_measure_direct, triangulate


@dataclass
class Case:
    label: str
    ok: bool
    detail: str = ""


@dataclass
class SuiteResult:
    name: str
    cases: list[Case] = field(default_factory=list)
    summary: str = ""

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.cases)

    @property
    def failures(self) -> int:
        return sum(not c.ok for c in self.cases)


def mixed_corpus(trials: int, seed: int) -> Iterator[Configuration]:
    """Round-robin over random, unit-bond, and lattice corpora."""
    gens = [
        corpus.random_configs(trials, seed),
        corpus.unit_corpus(trials, seed + 1),
        corpus.lattice_corpus(trials, seed + 2),
    ]
    for k in range(trials):
        yield next(gens[k % 3])


def _run(name: str, items, check: Callable) -> SuiteResult:
    res = SuiteResult(name)
    for label, item in items:
        try:
            detail = check(item)
            res.cases.append(Case(label, True, detail or ""))
        except LatticeCurvError as exc:
            res.cases.append(Case(label, False, f"{type(exc).__name__}: {exc} {exc.details}"))
        except AssertionError as exc:
            res.cases.append(Case(label, False, str(exc)))
    return res


def gauss_bonnet_suite(trials: int = 100, seed: int = 1) -> SuiteResult:
    def check(X):
        G = build_bond_graph(X)
        T = triangulate(G, EARCLIP)
        prof = gauss_bonnet_report(T)
        mus = {defect_measure(T), defect_measure(triangulate(G, FAN)), defect_measure_direct(G)}
        assert len(mus) == 1, f"defect measures disagree: {mus}"
        return f"N={len(X)} sumK={prof.sum_puiseux} 6chi={prof.six_chi} bd={prof.boundary_term}"

    items = ((f"trial {k}", X) for k, X in enumerate(mixed_corpus(trials, seed)))
    return _run("gauss-bonnet", items, check)


def decomposition_suite(trials: int = 100, seed: int = 1, potential: Potential | None = None) -> SuiteResult:
    potential = potential or Potential.heitmann_radin()
    worst = [0.0]

    def check(X):
        br = energy_decomposition(X, potential)
        if br.residual is not None and br.finite:
            worst[0] = max(worst[0], abs(br.residual) / residual_bound(br.total) * 1e-9)
        return f"N={len(X)} E={br.total!r} residual={br.residual!r}"

    if potential.kind == "hr":
        source = mixed_corpus(trials, seed)
    else:
        source = corpus.soft_corpus(trials, seed)
    items = ((f"trial {k}", X) for k, X in enumerate(source))
    res = _run("decomposition", items, check)
    res.summary = f"max |residual| / (1 + |E|) = {worst[0]:.3e} (bound 1e-9)"
    return res


def shell_suite(trials: int = 5, seed: int = 1) -> SuiteResult:
    def check(m):
        H = generate_lattice_patch(m)
        p = perimeter(build_bond_graph(H))
        X = add_closed_shell(H)
        p_new = perimeter(build_bond_graph(X))
        gained = len(X) - len(H)
        assert p_new == p + 6, f"perimeter {p} -> {p_new}"
        assert gained == shell_count(p, 1), f"gained {gained}, expected {shell_count(p, 1)}"
        return f"H_{m}: P {p} -> {p_new}, +{gained} particles"

    return _run("shell", ((f"m={m}", m) for m in range(trials)), check)


def removal_suite(trials: int = 100, seed: int = 1) -> SuiteResult:
    def check(X):
        rep = removal_inequality_check(X)
        return f"N={len(X)} P+mu={rep.lhs} P'+mu'+6={rep.rhs} slack={rep.slack}"

    items = [("removal example", corpus.removal_example())]
    for k, X in enumerate(corpus.hard_sphere_corpus(trials, seed)):
        if build_bond_graph(X).interior_vertices:
            items.append((f"trial {k}", X))
    return _run("removal", items, check)


def minimizer_suite(trials: int = MAX_ORACLE_N, seed: int = 1) -> SuiteResult:
    hr = Potential.heitmann_radin()

    def check(n):
        X = build_minimizer(n)
        br = energy_decomposition(X, hr)
        oracle, classes = brute_force_min_lattice(n)
        assert br.total == oracle, f"builder {br.total} vs oracle {oracle}"
        if n >= 3:
            G = build_bond_graph(X)
            assert is_topologically_crystallized(G), "not topologically crystallized"
            neg = negative_curvature_points(triangulate(G))
            assert len(neg) <= 1, f"{len(neg)} negative-curvature points"
        return f"E={br.total:g} oracle={oracle} ({classes} shapes)"

    n_max = min(trials, MAX_ORACLE_N)
    # one exhaustive run covers every size
    brute_force_min_lattice(n_max)
    return _run("minimizers", ((f"N={n}", n) for n in range(1, n_max + 1)), check)


SUITES = {
    "gauss-bonnet": gauss_bonnet_suite,
    "decomposition": decomposition_suite,
    "shell": shell_suite,
    "removal": removal_suite,
    "minimizers": minimizer_suite,
}

