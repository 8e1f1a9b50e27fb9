from __future__ import annotations

import itertools

import pytest

from dimerpf.corpus import grid, standard_corpus, wheel
from dimerpf.covering import Covering
from dimerpf.embedding import edge
from dimerpf.errors import InvalidCovering, NotEnclosed
from dimerpf.kasteleyn import (
    all_covering_signs,
    build_auxiliary_gamma,
    covering_sign,
    direct_and_label_enclosed,
    find_bmd_covering,
    orient_kasteleyn,
    verify_kasteleyn,
)
from dimerpf.oracle import enumerate_coverings
from dimerpf.reduce import EnclosedGraph, to_enclosed
from graphs import k4_inner


def test_orientation_is_kasteleyn_on_corpus():
    for _, g in standard_corpus()[::3]:
        if len(g.vertices) <= 10:
            assert verify_kasteleyn(g, orient_kasteleyn(g))


def test_orientation_covers_every_edge():
    g = wheel(6)
    orient = orient_kasteleyn(g)
    assert set(orient) == set(g.dimer)
    for e, (u, v) in orient.items():
        assert e == edge(u, v)


def test_partial_orientation_is_respected():
    g = grid(3, 3)
    e = edge(0, 1)
    orient = orient_kasteleyn(g, {e: (1, 0)})
    assert orient[e] == (1, 0)
    assert verify_kasteleyn(g, orient)


def test_enclosed_vertex_parity_matters():
    # the triangle around an interior vertex needs an even number of backward edges
    g = k4_inner()
    orient = orient_kasteleyn(g)
    assert verify_kasteleyn(g, orient)
    flipped = dict(orient)
    e = edge(0, 1)
    flipped[e] = orient[e][::-1]
    assert not verify_kasteleyn(g, flipped)


def test_covering_sign_of_single_dimer():
    orient = {edge(0, 1): (0, 1)}
    assert covering_sign(orient, {0: 1, 1: 2}, Covering.of([], [(0, 1)])) == 1
    assert covering_sign(orient, {0: 2, 1: 1}, Covering.of([], [(0, 1)])) == -1
    with pytest.raises(InvalidCovering):
        covering_sign(orient, {0: 1, 1: 2, 2: 3}, Covering.of([], [(1, 2)]))


def test_boundary_labels_run_counterclockwise():
    E = EnclosedGraph.certify(grid(2, 4))
    orient, lab = direct_and_label_enclosed(E)
    assert sorted(lab[v] for v in E.boundary) == list(range(1, len(E.boundary) + 1))
    assert [lab[v] for v in E.boundary] == list(range(1, len(E.boundary) + 1))
    B = len(E.boundary)
    for i in range(B - 1):
        assert orient[edge(E.boundary[i], E.boundary[i + 1])] == (E.boundary[i], E.boundary[i + 1])
    assert orient[edge(E.boundary[0], E.boundary[-1])] == (E.boundary[0], E.boundary[-1])


def test_every_boundary_covering_is_positive():
    for _, g in standard_corpus()[::4]:
        if len(g.vertices) > 8:
            continue
        E, _ = to_enclosed(g)
        orient, lab = direct_and_label_enclosed(E)
        covs = enumerate_coverings(E.graph, set(E.boundary))
        assert all_covering_signs(orient, lab, covs) <= {1}


def test_bmd_covering_has_boundary_monomers_only():
    E, _ = to_enclosed(wheel(5))
    cov = find_bmd_covering(E)
    assert cov.monomers <= set(E.boundary)
    cov.validate(E.graph.vertices, E.graph.dimer)


def test_direct_and_label_needs_enclosed_graph():
    with pytest.raises(NotEnclosed):
        direct_and_label_enclosed(grid(2, 2))


def test_gamma_has_double_boundary():
    E = EnclosedGraph.certify(grid(2, 3))
    orient, lab = direct_and_label_enclosed(E)
    gm = build_auxiliary_gamma(E, orient, lab)
    assert len(gm.graph.vertices) == len(E.graph.vertices) + len(E.boundary)
    assert verify_kasteleyn(gm.graph, gm.orient)
    signs = {covering_sign(gm.orient, gm.labeling, s) for s in enumerate_coverings(gm.graph, set())}
    assert signs == {1}


def test_sign_is_invariant_under_dimer_reordering():
    g = grid(2, 3)
    orient = orient_kasteleyn(g)
    lab = {v: v + 1 for v in g.vertices}
    for cov in enumerate_coverings(g, set()):
        ds = list(cov.dimers)
        for perm in itertools.permutations(ds):
            assert covering_sign(orient, lab, Covering.of([], perm)) == covering_sign(orient, lab, cov)
