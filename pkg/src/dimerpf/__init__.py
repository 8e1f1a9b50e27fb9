"""Exact monomer-dimer partition functions on planar graphs via Pfaffians."""

from __future__ import annotations

from .covering import Covering
from .embedding import Circuit, Face, PlanarGraph, circuit_is_good, merge_circuits
from .errors import DimerError
from .fullmd import (
    Skeleton,
    build_skeleton_rectangle,
    find_hamiltonian_cycle,
    full_partition_inout,
    full_partition_skeleton,
    upper_bound_poly,
)
from .kasteleyn import (
    build_auxiliary_gamma,
    covering_sign,
    direct_and_label_enclosed,
    find_bmd_covering,
    orient_kasteleyn,
    verify_kasteleyn,
)
from .oracle import count_fixed_monomers, enumerate_coverings, enumerate_partition
from .partition import (
    boundary_partition,
    boundary_partition_bijection,
    build_A,
    lower_bound_poly,
    monomer_correlation,
    wick_correlation,
)
from .pfaffian import SkewMatrix, pf_combinatorial, pf_elimination, pf_univariate, sub_pfaffian
from .poly import SparsePoly
from .reduce import to_enclosed
from .serialize import graph_from_json, graph_to_json

__all__ = [
    "Circuit",
    "Covering",
    "DimerError",
    "Face",
    "PlanarGraph",
    "Skeleton",
    "SkewMatrix",
    "SparsePoly",
    "boundary_partition",
    "boundary_partition_bijection",
    "build_A",
    "build_auxiliary_gamma",
    "build_skeleton_rectangle",
    "circuit_is_good",
    "count_fixed_monomers",
    "covering_sign",
    "direct_and_label_enclosed",
    "enumerate_coverings",
    "enumerate_partition",
    "find_bmd_covering",
    "find_hamiltonian_cycle",
    "full_partition_inout",
    "full_partition_skeleton",
    "graph_from_json",
    "graph_to_json",
    "lower_bound_poly",
    "merge_circuits",
    "monomer_correlation",
    "orient_kasteleyn",
    "pf_combinatorial",
    "pf_elimination",
    "pf_univariate",
    "sub_pfaffian",
    "to_enclosed",
    "upper_bound_poly",
    "verify_kasteleyn",
    "wick_correlation",
]
