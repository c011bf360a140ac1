import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latticecurv import corpus
from latticecurv.config import BondRange, Configuration
from latticecurv.energy import (
    Potential,
    default_bond_range,
    elastic_energy,
    energy_decomposition,
    nonbond_energy,
    potential_eval,
    total_energy,
)
from latticecurv.errors import BondRangeError, IdentityViolation, PreconditionError

HR = Potential.heitmann_radin()
SOFT = BondRange(0.8, 1.2)


def lj(r, p):
    return r ** (-2 * p) - 2 * r ** (-p)


def naive_total(X, f):
    return sum(f(math.dist(a, b)) for a, b in itertools.combinations(X.points, 2))


def test_lj_minimum():
    for p in (2, 6, 20):
        V = Potential.lennard_jones(p)
        assert potential_eval(V, 1.0) == -1.0
        rs = np.linspace(0.7, 3.0, 2001)
        assert V.values(rs).min() >= -1.0
    assert Potential.lennard_jones(6)(1e6) == pytest.approx(0.0, abs=1e-30)


def test_hr_values():
    assert HR(0.9) == math.inf
    assert HR(1.0) == -1.0
    assert HR(1.0 + 1e-12) == -1.0
    assert HR(1.01) == 0.0


def test_potential_rejects_nonpositive_radius():
    with pytest.raises(PreconditionError):
        HR(0.0)
    with pytest.raises(ValueError):
        Potential.lennard_jones(0)


def test_custom_potential_normalisation():
    V = Potential.custom(lambda r: (r - 1.0) ** 2 - 1.0)
    assert V(1.0) == -1.0 and V.name == "custom"
    with pytest.raises(ValueError):
        Potential.custom(lambda r: r)
    T = Potential.from_table([0.5, 1.0, 2.0], [3.0, -1.0, 0.0])
    assert T(1.5) == pytest.approx(-0.5)


@pytest.mark.parametrize(
    "X, expected",
    [
        (corpus.unit_triangle(), -3.0),
        (corpus.hexagon_patch(1), -12.0),
        (corpus.two_points(0.5), math.inf),
        (corpus.unit_square(), -4.0),
    ],
)
def test_hr_total(X, expected):
    assert total_energy(X, HR) == expected


def test_elastic_zero_at_unit_bonds():
    V = Potential.lennard_jones(6)
    assert elastic_energy(corpus.hexagon_patch(2), V, SOFT) == pytest.approx(0.0, abs=1e-12)


def test_lj_two_points_stretched():
    V = Potential.lennard_jones(6)
    X = corpus.two_points(1.1)
    assert elastic_energy(X, V, SOFT) == pytest.approx(lj(1.1, 6) + 1.0, rel=1e-14)
    assert nonbond_energy(X, V, SOFT) == 0.0


def test_lj_two_points_far_apart():
    V = Potential.lennard_jones(6)
    X = corpus.two_points(2.0)
    assert elastic_energy(X, V, SOFT) == 0.0
    assert nonbond_energy(X, V, SOFT) == pytest.approx(2.0**-12 - 2 * 2.0**-6, rel=1e-14)


def test_decomposition_two_points():
    br = energy_decomposition(corpus.two_points(), HR)
    assert (br.total, br.bulk, br.perimeter, br.euler, br.defect) == (-1, -6, 2, 3, 0)
    assert br.residual == 0


def test_decomposition_square():
    br = energy_decomposition(corpus.unit_square(), HR)
    assert (br.total, br.bulk, br.perimeter, br.euler, br.defect) == (-4, -12, 4, 3, 1)


def test_decomposition_h1():
    br = energy_decomposition(corpus.hexagon_patch(1), HR)
    assert (br.total, br.bulk, br.perimeter, br.euler, br.defect) == (-12, -21, 6, 3, 0)


def test_decomposition_infinite_energy_skips_residual():
    X = corpus.pentagon_with_wire()
    br = energy_decomposition(X, HR)
    assert br.total == math.inf and br.residual is None
    # the combinatorial side is still meaningful
    assert br.bulk + br.perimeter + br.euler + br.defect == -6


def test_hr_requires_unit_range():
    with pytest.raises(BondRangeError):
        energy_decomposition(corpus.unit_triangle(), HR, SOFT)


def test_default_range_clipping():
    V = Potential.lennard_jones(6)
    assert default_bond_range(corpus.hexagon_patch(1), V) == SOFT
    X = Configuration(((0, 0), (0.8, 0), (5, 5)))
    r = default_bond_range(X, V)
    assert r.alpha == 0.8 and r.beta < math.sqrt(2) * 0.8
    with pytest.raises(BondRangeError):
        default_bond_range(Configuration(((0, 0), (0.6, 0))), V)
    assert default_bond_range(X, HR) == BondRange(1.0, 1.0)


def test_identity_holds_for_any_normalised_potential():
    V = Potential.custom(lambda r: np.where(np.abs(r - 1.0) < 1e-9, -1.0, -0.5))
    br = energy_decomposition(corpus.hexagon_patch(1).rotated(0.3), V, SOFT)
    assert br.nonbond == pytest.approx(-0.5 * (21 - 12))
    assert br.residual == pytest.approx(0.0, abs=1e-12)


def test_residual_violation_is_reported(monkeypatch):
    from latticecurv import energy

    monkeypatch.setattr(energy, "defect_measure", lambda T: 1)
    with pytest.raises(IdentityViolation) as info:
        energy_decomposition(corpus.unit_triangle(), HR)
    assert info.value.details["residual"] == -1.0


@pytest.mark.parametrize("name", sorted(corpus.NAMED))
def test_hr_identity_named(name):
    X = corpus.NAMED[name]()
    br = energy_decomposition(X, HR)
    assert br.total == naive_total(X, lambda r: HR(r))
    if br.finite:
        assert br.total == br.bulk + br.perimeter + br.euler + br.defect
        assert br.elastic == 0 and br.nonbond == 0


@pytest.mark.parametrize("p", [2, 6, 20])
def test_lj_matches_naive_sum(p):
    V = Potential.lennard_jones(p)
    for X in corpus.soft_corpus(20, seed=p):
        br = energy_decomposition(X, V)
        assert br.total == pytest.approx(naive_total(X, lambda r: lj(r, p)), rel=1e-12, abs=1e-12)
        assert abs(br.residual) <= 1e-9 * (1 + abs(br.total))
        assert br.elastic >= 0


@settings(max_examples=40, deadline=None)
@given(
    st.integers(0, 10**9),
    st.sampled_from([2, 6, 20]),
    st.floats(0, 2 * math.pi),
    st.floats(-100, 100),
    st.floats(-100, 100),
)
def test_decomposition_rigid_motion_invariance(seed, p, angle, dx, dy):
    V = Potential.lennard_jones(p)
    X = next(corpus.soft_corpus(1, seed))
    Y = X.rotated(angle).translated(dx, dy)
    a = energy_decomposition(X, V)
    b = energy_decomposition(Y, V, a.bond_range)
    assert (a.bulk, a.perimeter, a.euler, a.defect) == (b.bulk, b.perimeter, b.euler, b.defect)
    for f in ("total", "elastic", "nonbond"):
        assert getattr(a, f) == pytest.approx(getattr(b, f), rel=1e-9, abs=1e-9)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9), st.sampled_from(["random", "unit", "lattice"]))
def test_hr_identity_property(seed, kind):
    if kind == "random":
        X = next(corpus.random_configs(1, seed, dmin=1.0))
    else:
        X = next({"unit": corpus.unit_corpus, "lattice": corpus.lattice_corpus}[kind](1, seed))
    br = energy_decomposition(X, HR)
    assert br.total == br.bulk + br.perimeter + br.euler + br.defect


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**9))
def test_hr_overlaps_land_in_nonbond(seed):
    X = next(corpus.random_configs(1, seed, n_range=(10, 30)))
    br = energy_decomposition(X, HR)
    assert (br.total == math.inf) == (br.nonbond == math.inf)
