from __future__ import annotations

import pytest

from dimerpf.corpus import cycle, grid
from dimerpf.errors import TooLarge
from dimerpf.oracle import count_fixed_monomers, enumerate_coverings, enumerate_partition, x_to_z, z_to_x
from dimerpf.poly import univariate
from graphs import path, single_edge


def test_square_counts(sq):
    # monomer counts have the parity of the vertex count; every vertex is on the boundary
    expected = univariate({4: 1, 2: 4, 0: 2}, "z")
    assert enumerate_partition(sq, "all", "z") == expected
    assert enumerate_partition(sq, "boundary", "z") == expected


def test_interior_vertices_excluded_from_boundary_region():
    g = grid(3, 3)
    full = enumerate_partition(g, "all", "z")
    bnd = enumerate_partition(g, "boundary", "z")
    assert full.coeff({"z": 9}) == 1
    assert bnd.coeff({"z": 9}) == 0
    assert sum(c for _, c in full.items()) > sum(c for _, c in bnd.items())


def test_single_edge_and_path():
    assert enumerate_partition(single_edge()) == univariate({2: 1, 0: 1}, "z")
    # path on 3 vertices: one monomer (2 ways) or three monomers
    assert enumerate_partition(path(3)) == univariate({3: 1, 1: 2}, "z")


def test_pure_dimer_coverings():
    assert len(enumerate_coverings(grid(2, 4), set())) == 5
    assert len(enumerate_coverings(grid(3, 4), set())) == 11
    assert count_fixed_monomers(grid(2, 3), []) == 3


def test_fixed_monomers():
    g = grid(2, 2)
    assert count_fixed_monomers(g, [0, 1]) == 1
    assert count_fixed_monomers(g, [0, 3]) == 0


def test_weights_enter_the_sum():
    g = cycle(4).with_weights(monomer={0: 3}, dimer={frozenset({0, 1}): 5})
    p = enumerate_partition(g)
    assert p.coeff({"z": 4}) == 3
    assert p.coeff({"z": 0}) == 5 + 1


def test_variable_conversion():
    p = univariate({4: 1, 2: 4, 0: 2}, "z")
    assert z_to_x(p) == univariate({2: 1, 1: 4, 0: 2}, "x")
    assert x_to_z(z_to_x(p)) == p


def test_cap(monkeypatch):
    monkeypatch.setenv("DIMERPF_MAX_ORACLE", "4")
    with pytest.raises(TooLarge):
        enumerate_partition(grid(2, 3))
