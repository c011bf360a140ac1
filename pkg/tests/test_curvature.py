import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latticecurv import corpus
from latticecurv.bondgraph import build_bond_graph, has_simple_boundary
from latticecurv.curvature import (
    curvature_bound_check,
    euclidean_puiseux,
    euler_like_curvature,
    gauss_bonnet_report,
    gromov_euler_curvatures,
    handshake_sums,
    max_puiseux_curvature,
    puiseux_curvature,
)
from latticecurv.errors import BoundaryNotSimpleError, PreconditionError
from latticecurv.triangulation import EARCLIP, FAN, triangulate


def tri(X, strategy=EARCLIP):
    return triangulate(build_bond_graph(X), strategy)


def oracle_puiseux(T):
    """K from the definition: 6 or 3 minus the number of edges among the neighbours."""
    edges = set(T.edges)
    nbrs = [set() for _ in range(T.n)]
    for u, v in edges:
        nbrs[u].add(v)
        nbrs[v].add(u)
    out = []
    for x in range(T.n):
        s1 = sum((min(a, b), max(a, b)) in edges for a, b in itertools.combinations(nbrs[x], 2))
        out.append((3 if x in T.base.boundary_vertices else 6) - s1)
    return out


def vertex_at(G, xy):
    return min(range(G.n), key=lambda k: math.dist(G.config.points[k], xy))


def test_h1_puiseux():
    T = tri(corpus.hexagon_patch(1))
    K = puiseux_curvature(T)
    centre = vertex_at(T.base, (0, 0))
    assert K[centre] == 0
    assert sorted(K[x] for x in range(7) if x != centre) == [1] * 6


def test_square_puiseux():
    T = tri(corpus.unit_square())
    K = puiseux_curvature(T)
    (chord,) = T.chords
    assert [K[x] for x in chord] == [1, 1]
    assert [K[x] for x in range(4) if x not in chord] == [2, 2]
    assert sum(K) == 6


def test_euler_like_offsets():
    T = tri(corpus.hexagon_patch(2))
    K, Kt = puiseux_curvature(T), euler_like_curvature(T)
    for x in range(T.n):
        assert Kt[x] == K[x] + (3 if x in T.base.boundary_vertices else 0)


def test_isolated_vertex():
    T = tri(corpus.Configuration(((0, 0),)))
    assert puiseux_curvature(T) == [3]
    assert euler_like_curvature(T) == [6]


def _interior_gromov_euler(X):
    G = build_bond_graph(X)
    inner = [x for x in G.interior_vertices]
    assert inner
    return [gromov_euler_curvatures(G, x) for x in inner]


def test_gromov_euler_triangular_lattice():
    assert set(_interior_gromov_euler(corpus.hexagon_patch(3))) == {(Fraction(0), Fraction(0))}


def test_gromov_euler_square_lattice():
    values = _interior_gromov_euler(corpus.square_grid(5))
    assert len(values) == 9
    assert set(values) == {(Fraction(0), Fraction(1, 3))}


def test_gromov_honeycomb():
    values = _interior_gromov_euler(corpus.honeycomb_patch())
    assert {g for g, _ in values} == {Fraction(0)}
    assert {e for _, e in values} == {Fraction(1, 2)}


def test_max_puiseux_square_and_h1():
    G = build_bond_graph(corpus.unit_square())
    assert [max_puiseux_curvature(G, x) for x in range(4)] == [2] * 4
    G = build_bond_graph(corpus.hexagon_patch(1))
    centre = vertex_at(G, (0, 0))
    assert {max_puiseux_curvature(G, x) for x in range(7) if x != centre} == {1}


def test_max_puiseux_h2_rim():
    G = build_bond_graph(corpus.hexagon_patch(2))
    corner = vertex_at(G, (2, 0))
    midside = vertex_at(G, (1.5, math.sqrt(3) / 2))
    assert G.interior_degree(corner) == 1 and max_puiseux_curvature(G, corner) == 1
    assert G.interior_degree(midside) == 2 and max_puiseux_curvature(G, midside) == 0
    rim = sorted(max_puiseux_curvature(G, x) for x in G.boundary_vertices)
    assert rim == [0] * 6 + [1] * 6


def test_max_puiseux_refuses_interior_and_wires():
    G = build_bond_graph(corpus.hexagon_patch(1))
    with pytest.raises(PreconditionError):
        max_puiseux_curvature(G, vertex_at(G, (0, 0)))
    with pytest.raises(BoundaryNotSimpleError):
        max_puiseux_curvature(build_bond_graph(corpus.triangle_with_tail()), 0)


def test_euclidean_puiseux_values():
    G = build_bond_graph(corpus.unit_square())
    assert euclidean_puiseux(G, 0) == pytest.approx(math.pi / 2)
    G = build_bond_graph(corpus.hexagon_patch(1))
    rim = [x for x in G.boundary_vertices]
    assert [euclidean_puiseux(G, x) for x in rim] == pytest.approx([math.pi / 3] * 6)
    G = build_bond_graph(corpus.hexagon_patch(2))
    assert euclidean_puiseux(G, vertex_at(G, (1.5, math.sqrt(3) / 2))) == pytest.approx(0, abs=1e-12)


def test_gauss_bonnet_h1():
    prof = gauss_bonnet_report(tri(corpus.hexagon_patch(1)))
    assert prof.sum_puiseux == 6 and prof.chi == 1
    assert prof.perimeter == prof.n_boundary == 6


def test_gauss_bonnet_two_points():
    prof = gauss_bonnet_report(tri(corpus.two_points()))
    assert prof.puiseux == [3, 3]
    assert prof.six_chi + 3 * (2 - 2) == 6 == prof.sum_puiseux


def test_gauss_bonnet_outer_wire_correction():
    prof = gauss_bonnet_report(tri(corpus.triangle_with_tail()))
    assert prof.sum_puiseux - prof.six_chi == prof.boundary_term == 3 * (7 - 5)


def test_bound_h2_all_rim_vertices():
    report = curvature_bound_check(build_bond_graph(corpus.hexagon_patch(2)))
    assert len(report) == 12
    assert all(r.holds for r in report)


def test_bound_square():
    for r in curvature_bound_check(build_bond_graph(corpus.unit_square())):
        assert r.k_max / 6 == pytest.approx(1 / 3)
        assert r.k_eu / (2 * math.pi) == pytest.approx(1 / 4)


def test_bound_h1_equality():
    for r in curvature_bound_check(build_bond_graph(corpus.hexagon_patch(1))):
        assert r.k_max / 6 == pytest.approx(1 / 6)
        assert r.k_eu / (2 * math.pi) == pytest.approx(1 / 6)
        assert r.slack == pytest.approx(0, abs=1e-12)


def test_bound_needs_hard_spheres():
    with pytest.raises(PreconditionError):
        curvature_bound_check(build_bond_graph(corpus.pentagon_with_wire()))


@pytest.mark.parametrize("name", sorted(corpus.NAMED))
def test_named_examples_match_oracle(name):
    X = corpus.NAMED[name]()
    for strategy in (EARCLIP, FAN):
        T = tri(X, strategy)
        prof = gauss_bonnet_report(T)
        assert prof.puiseux == oracle_puiseux(T)
        assert all(lhs == rhs for lhs, rhs in handshake_sums(T).values())
        if has_simple_boundary(T.base):
            assert prof.sum_puiseux == prof.six_chi == 6


@pytest.mark.parametrize("name", ["H1", "H2", "H3", "rhombus", "triangle"])
def test_max_puiseux_attained_without_chords(name):
    G = build_bond_graph(corpus.NAMED[name]())
    Ks = [puiseux_curvature(triangulate(G, s)) for s in (EARCLIP, FAN)]
    for x in G.boundary_vertices:
        assert max_puiseux_curvature(G, x) == max(K[x] for K in Ks)


def test_max_puiseux_attained_by_square_diagonals():
    # each corner reaches 2 - i = 2 under the diagonal that avoids it
    G = build_bond_graph(corpus.unit_square())
    for chord in [(0, 2), (1, 3)]:
        T = triangulate(G)
        T = type(T)(G, (chord,), T.tri_faces, T.strategy)
        K = puiseux_curvature(T)
        for x in range(4):
            assert K[x] == (1 if x in chord else max_puiseux_curvature(G, x))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_max_puiseux_is_upper_envelope(seed):
    X = next(corpus.lattice_corpus(1, seed))
    G = build_bond_graph(X)
    if not has_simple_boundary(G):
        return
    for s in (EARCLIP, FAN):
        K = puiseux_curvature(triangulate(G, s))
        assert all(max_puiseux_curvature(G, x) >= K[x] for x in G.boundary_vertices)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_bound_and_turning_on_hard_spheres(seed):
    corpus_iter = corpus.hard_sphere_corpus(3, seed)
    for X in corpus_iter:
        report = curvature_bound_check(build_bond_graph(X))
        assert all(r.holds for r in report)
        assert math.fsum(r.k_eu for r in report) == pytest.approx(2 * math.pi, abs=1e-9)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**9), st.sampled_from(["random", "unit", "lattice"]))
def test_gauss_bonnet_property(seed, kind):
    gen = {"random": corpus.random_configs, "unit": corpus.unit_corpus, "lattice": corpus.lattice_corpus}[kind]
    T = tri(next(gen(1, seed)))
    prof = gauss_bonnet_report(T)
    assert prof.puiseux == oracle_puiseux(T)
    assert prof.sum_puiseux == prof.six_chi + prof.boundary_term
