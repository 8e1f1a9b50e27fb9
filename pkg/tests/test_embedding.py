from __future__ import annotations

import pytest

from dimerpf.corpus import grid, standard_corpus, wheel
from dimerpf.embedding import PlanarGraph, backwards_count, circuit_is_good, edge, merge_circuits
from dimerpf.errors import CrossingEdges, InvalidGraph, NotACircuit, NotMergeable, SelfLoop
from graphs import k4_inner, nested_square, path, square


def test_square_faces_and_euler(sq):
    assert sq.face_count() == 2
    assert sq.euler_characteristic() == 2
    assert sq.boundary_circuit() is not None


def test_euler_relation_across_corpus():
    for _, g in standard_corpus()[::7]:
        comps = len(g.components)
        assert len(g.vertices) - len(g.dimer) + g.face_count() == 1 + comps


def test_rotation_is_counterclockwise():
    g = k4_inner()
    # around the inner vertex the neighbours appear in angular order 0, 1, 2
    r = g.rotation[3]
    i = r.index(0)
    assert r[i:] + r[:i] == (0, 1, 2)


def test_crossing_edges_rejected():
    pts = {0: (0, 0), 1: (1, 1), 2: (0, 1), 3: (1, 0)}
    with pytest.raises(CrossingEdges):
        PlanarGraph.from_coordinates(pts, [(0, 1), (2, 3)])


def test_self_loop_and_unknown_vertex_rejected():
    with pytest.raises(SelfLoop):
        PlanarGraph.from_coordinates({0: (0, 0)}, [(0, 0)])
    with pytest.raises(InvalidGraph):
        PlanarGraph.from_coordinates({0: (0, 0)}, [(0, 5)])


def test_circuit_is_returned_counterclockwise(sq):
    c = sq.circuit([0, 1, 3, 2])
    cw = sq.circuit(c.reversed())
    assert cw.vertices == c.vertices
    with pytest.raises(NotACircuit):
        sq.circuit([0, 1])


def test_enclosed_vertices():
    g = k4_inner()
    assert g.enclosed_vertices([0, 1, 2]) == {3}
    assert g.enclosed_vertex_count([0, 1, 3]) == 0


def test_nested_component_is_enclosed():
    g = nested_square()
    assert len(g.components) == 2
    assert g.enclosed_vertices([0, 1, 2, 3]) == {4, 5}
    assert g.euler_characteristic() == 3


def test_boundary_subgraph():
    g = wheel(5)
    verts, edges = g.boundary_subgraph()
    hub = [v for v in g.vertices if len(g.rotation[v]) == 5][0]
    assert hub not in verts
    assert len(edges) == 5
    assert path(4).boundary_subgraph()[0] == set(range(4))


def test_delete_and_subgraph_keep_planarity():
    g = grid(3, 3)
    h = g.delete_vertices([4])
    assert len(h.vertices) == 8
    assert h.face_count() == 2
    h2 = g.delete_edges([edge(0, 1)])
    assert len(h2.dimer) == len(g.dimer) - 1


def test_merge_circuits_on_square_with_diagonal(sqd):
    c1 = sqd.circuit([0, 1, 2])
    c2 = sqd.circuit([0, 2, 3])
    m = merge_circuits(c1, c2)
    assert m.edges() == c1.edges() ^ c2.edges()
    assert len(m.vertices) == 4


def test_merge_rejects_disjoint_circuits():
    g = grid(2, 4)
    c1 = g.circuit([0, 1, 5, 4])
    c2 = g.circuit([2, 3, 7, 6])
    with pytest.raises(NotMergeable):
        merge_circuits(c1, c2)


def test_goodness_counts_backwards_edges(sq):
    c = sq.circuit([0, 1, 3, 2])
    darts = c.darts()
    all_forward = {edge(a, b): (a, b) for a, b in darts}
    assert backwards_count(all_forward, c) == 0
    assert not circuit_is_good(sq, all_forward, c)
    one_back = dict(all_forward)
    a, b = darts[0]
    one_back[edge(a, b)] = (b, a)
    assert backwards_count(one_back, c) == 1
    assert circuit_is_good(sq, one_back, c)


def test_reversed_embedding_keeps_faces():
    g = grid(2, 3)
    walk = g.walks[g.outer_walk[0]]
    inner = next(w for w in range(len(g.walks)) if w != g.outer_walk[0])
    h = g.reversed_embedding(g.walks[inner][0])
    assert h.face_count() == g.face_count()
    assert len(walk) == 6


def test_simple_cycles_of_square():
    assert len(square().enumerate_simple_cycles()) == 1
    assert len(grid(2, 3).enumerate_simple_cycles()) == 3


def test_three_square_strip_has_six_cycles():
    # three unit squares, two dominoes and the perimeter
    cycles = grid(2, 4).enumerate_simple_cycles()
    assert sorted(len(c.vertices) for c in cycles) == [4, 4, 4, 6, 6, 8]
