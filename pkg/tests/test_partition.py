from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest

from dimerpf.corpus import grid, random_tree, standard_corpus, wheel
from dimerpf.errors import IndexOffBoundary, NegativeDimerWeight, NoPerfectMatching
from dimerpf.kasteleyn import orient_kasteleyn
from dimerpf.oracle import count_fixed_monomers, enumerate_partition, z_to_x
from dimerpf.partition import (
    boundary_partition,
    boundary_partition_bijection,
    build_A,
    lower_bound_poly,
    monomer_correlation,
    off_close_packing_correlations,
    prepare,
    two_point_matrix,
    wick_correlation,
)
from dimerpf.pfaffian import pf_elimination, pf_univariate
from dimerpf.poly import univariate
from graphs import path, single_edge, star3


def test_square_boundary_partition(sq):
    expected = univariate({4: 1, 2: 4, 0: 2}, "z")
    assert boundary_partition(sq, "z") == expected
    assert boundary_partition_bijection(sq, "z") == expected
    assert boundary_partition(sq, "x") == univariate({2: 1, 1: 4, 0: 2}, "x")


@pytest.mark.parametrize("g", [single_edge(), path(3), path(5), star3(), grid(2, 3), wheel(5), random_tree(9, 0)])
def test_matches_oracle_on_small_graphs(g):
    oracle = enumerate_partition(g, "boundary", "z")
    assert boundary_partition(g, "z") == oracle
    assert boundary_partition_bijection(g, "z") == oracle
    assert boundary_partition(g, "x") == z_to_x(oracle)


def test_odd_graph_has_half_integer_x_exponents():
    p = boundary_partition(path(3), "x")
    assert all(e.denominator == 2 for e in p.univariate("x"))


def test_weighted_graph_matches_oracle():
    g = grid(2, 3).with_weights(
        monomer={0: 2, 1: Fraction(1, 3)},
        dimer={e: Fraction(k + 1, 2) for k, e in enumerate(sorted(grid(2, 3).dimer, key=sorted))},
    )
    assert boundary_partition(g, "z") == enumerate_partition(g, "boundary", "z")


def test_interior_monomer_weights_are_ignored():
    g = wheel(5)
    hub = next(v for v in g.vertices if len(g.rotation[v]) == 5)
    heavy = g.with_weights(monomer={hub: 7})
    assert boundary_partition(heavy, "z") == boundary_partition(g, "z")


def test_build_A_numeric_and_symbolic(sq):
    p = prepare(sq)
    A = build_A(p.enclosed.graph, p.orient, p.labeling)
    assert A.n == 4
    # unit monomer weights: 1 + 4 + 2 coverings
    assert pf_elimination(A) == 7
    zero = build_A(p.enclosed.graph, p.orient, p.labeling, ell={v: 0 for v in sq.vertices})
    assert pf_elimination(zero) == 2
    sym = build_A(p.enclosed.graph, p.orient, p.labeling, symbolic=True, var="x")
    assert pf_univariate(sym, "x") == univariate({2: 1, 1: 4, 0: 2}, "x")


def test_correlation_on_strip():
    g = grid(2, 4)
    p = prepare(g)
    bnd = sorted(g.boundary_subgraph()[0])
    z0 = count_fixed_monomers(g, [])
    for vs in itertools.combinations(bnd, 2):
        assert monomer_correlation(g, vs, p) == count_fixed_monomers(g, vs) / z0
    for vs in itertools.combinations(bnd, 4):
        assert wick_correlation(g, vs, p) == monomer_correlation(g, vs, p)


def test_two_point_matrix_matches_pair_ratios():
    g = grid(2, 3)
    p = prepare(g)
    m = two_point_matrix(p)
    order = p.order
    z0 = count_fixed_monomers(p.enclosed.graph, [])
    for i, j in itertools.combinations(range(len(order)), 2):
        assert m[i][j] == count_fixed_monomers(p.enclosed.graph, [order[i], order[j]]) / z0


def test_correlation_errors(sq):
    with pytest.raises(IndexOffBoundary):
        monomer_correlation(sq, [0])
    hub = next(v for v in wheel(5).vertices if len(wheel(5).rotation[v]) == 5)
    with pytest.raises(IndexOffBoundary):
        monomer_correlation(wheel(5), [hub, 0])
    with pytest.raises(NoPerfectMatching):
        monomer_correlation(star3(), [1, 2])


def test_wick_rule_fails_off_close_packing(sqd):
    ell = {v: 1 for v in sqd.vertices}
    direct, wick = off_close_packing_correlations(sqd, ell, [0, 1, 2, 3])
    assert direct != wick
    zero = {v: 0 for v in sqd.vertices}
    direct0, wick0 = off_close_packing_correlations(sqd, zero, [0, 1, 2, 3])
    assert direct0 == wick0


def test_lower_bound_is_exact_for_kasteleyn_setup():
    g = grid(2, 3)
    p = prepare(g)
    lb = lower_bound_poly(p.enclosed.graph, p.orient, p.labeling)
    for M, c in lb.items():
        if M <= set(p.enclosed.boundary):
            assert c == count_fixed_monomers(p.enclosed.graph, M)


def test_lower_bound_with_random_orientation():
    rng = random.Random(3)
    g = grid(2, 3)
    for _ in range(10):
        orient = {e: tuple(sorted(e)) if rng.random() < 0.5 else tuple(sorted(e))[::-1] for e in g.dimer}
        labs = list(range(1, 7))
        rng.shuffle(labs)
        lb = lower_bound_poly(g, orient, dict(zip(g.vertices, labs)))
        for M, c in lb.items():
            assert abs(c) <= count_fixed_monomers(g, M)


def test_lower_bound_on_tree_and_odd_graph():
    g = random_tree(6, 0)
    orient = orient_kasteleyn(g)
    lb = lower_bound_poly(g, orient, {v: v + 1 for v in g.vertices})
    for M, c in lb.items():
        assert abs(c) == count_fixed_monomers(g, M)
    assert lower_bound_poly(path(3), orient_kasteleyn(path(3)), {0: 1, 1: 2, 2: 3}) == {}


def test_lower_bound_rejects_negative_weights(sq):
    g = sq.with_weights(dimer={next(iter(sq.dimer)): -1})
    with pytest.raises(NegativeDimerWeight):
        lower_bound_poly(g, orient_kasteleyn(g), {v: v + 1 for v in g.vertices})


def test_partition_on_corpus_sample():
    for _, g in standard_corpus()[::11]:
        assert boundary_partition(g, "z") == enumerate_partition(g, "boundary", "z")
