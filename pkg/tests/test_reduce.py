from __future__ import annotations

import pytest

from dimerpf.corpus import cycle, grid, random_tree, standard_corpus
from dimerpf.errors import BoundaryAlreadyEven, NotConnected, NotEnclosed
from dimerpf.oracle import enumerate_partition
from dimerpf.reduce import (
    GADGET,
    PAD,
    EnclosedGraph,
    build_boundary_circuit,
    connect_components,
    evenize_boundary,
    pad_to_even,
    to_enclosed,
)
from graphs import nested_square, path, star3


def test_pad_only_for_odd_vertex_counts():
    g, rec = pad_to_even(path(3))
    assert len(g.vertices) == 4
    assert [tag for _, tag in rec.added_vertices] == [PAD]
    g2, rec2 = pad_to_even(path(4))
    assert len(g2.vertices) == 4 and not rec2.added_vertices


def test_connectors_have_zero_weight():
    g, rec = connect_components(nested_square())
    assert g.is_connected()
    assert rec.added_edges
    for (u, v), _ in rec.added_edges:
        assert g.weight(u, v) == 0


def test_boundary_shadowing_gives_circuit():
    g, _ = build_boundary_circuit(star3())
    assert g.boundary_circuit() is not None
    with pytest.raises(NotConnected):
        build_boundary_circuit(nested_square())


def test_evenize_odd_cycle():
    g, rec = evenize_boundary(cycle(5))
    assert len(g.boundary_circuit().vertices) % 2 == 0
    assert any(tag == GADGET for _, tag in rec.added_vertices)
    with pytest.raises(BoundaryAlreadyEven):
        evenize_boundary(cycle(4))


def test_certify_rejects_non_enclosed():
    with pytest.raises(NotEnclosed):
        EnclosedGraph.certify(path(4))
    with pytest.raises(NotEnclosed):
        EnclosedGraph.certify(cycle(5))
    E = EnclosedGraph.certify(grid(2, 3))
    assert len(E.boundary) == 6 and not E.interior


def test_to_enclosed_across_corpus():
    for _, g in standard_corpus()[::5]:
        E, _ = to_enclosed(g)
        assert E.graph.is_connected()
        assert len(E.boundary) % 2 == 0
        assert len(E.graph.vertices) % 2 == 0


def test_reduction_preserves_coverings_of_original_vertices():
    # added edges weigh 0; the pad monomer weighs 1, so the covering sum
    # over the original graph is unchanged up to the pad's own monomer
    for g in (path(3), random_tree(7, 1), star3(), grid(2, 3)):
        E, rec = to_enclosed(g)
        original = enumerate_partition(g, "all", "z")
        reduced = enumerate_partition(E.graph, "all", "z")
        padded = bool(rec.added_vertices) and any(t == PAD for _, t in rec.added_vertices)
        gadget = any(t == GADGET for _, t in rec.added_vertices)
        if not gadget:
            if padded:
                assert reduced.univariate("z") == {k + 1: c for k, c in original.univariate("z").items()}
            else:
                assert reduced == original


def test_augmentation_record_json():
    _, rec = to_enclosed(star3())
    data = rec.to_json()
    assert set(data) == {"added_edges", "added_vertices", "id_map"}
