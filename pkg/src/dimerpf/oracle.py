"""Brute-force enumeration of monomer-dimer coverings (ground truth for tests).

Deliberately naive: plain backtracking over vertices in id order, no
matching theory.  Polynomials are returned in ``z`` with one power per
monomer, coefficients carrying the product of dimer and monomer weights.
"""

from __future__ import annotations

import os
from fractions import Fraction
from typing import Iterable, Iterator

from .covering import Covering
from .errors import TooLarge
from .poly import SparsePoly

DEFAULT_CAP = 16


def oracle_cap() -> int:
    return int(os.environ.get("DIMERPF_MAX_ORACLE", DEFAULT_CAP))


def _region(g, region) -> set[int]:
    if region == "all":
        return set(g.vertices)
    if region == "boundary":
        return g.boundary_subgraph()[0]
    return set(region)


def _coverings(g, allowed: set[int], forced: set[int] = frozenset()) -> Iterator[tuple[frozenset, list]]:
    cap = oracle_cap()
    if len(g.vertices) > cap:
        raise TooLarge(f"oracle is capped at {cap} vertices (got {len(g.vertices)})")
    order = list(g.vertices)
    nbrs = {v: sorted(g.rotation[v]) for v in order}
    free = {v: True for v in order}
    monos: list[int] = []
    dims: list[frozenset] = []

    def rec(k: int):
        while k < len(order) and not free[order[k]]:
            k += 1
        if k == len(order):
            yield frozenset(monos), list(dims)
            return
        v = order[k]
        free[v] = False
        if v in forced or v in allowed:
            monos.append(v)
            yield from rec(k + 1)
            monos.pop()
        if v not in forced:
            for u in nbrs[v]:
                if free[u] and u not in forced:
                    free[u] = False
                    dims.append(frozenset((v, u)))
                    yield from rec(k + 1)
                    dims.pop()
                    free[u] = True
        free[v] = True

    yield from rec(0)


def enumerate_coverings(g, region="all") -> list[Covering]:
    """Every covering whose monomers lie in ``region`` ("all", "boundary" or a vertex set)."""
    return [Covering(m, frozenset(d)) for m, d in _coverings(g, _region(g, region))]


def enumerate_partition(g, region="all", var: str = "z") -> SparsePoly:
    """sum over coverings of prod(d_e) * prod(l_v) * var^(number of monomers)."""
    acc: dict[int, Fraction] = {}
    for m, dims in _coverings(g, _region(g, region)):
        w = Fraction(1)
        for d in dims:
            w *= g.dimer[d]
        for v in m:
            w *= g.monomer[v]
        if w:
            acc[len(m)] = acc.get(len(m), Fraction(0)) + w
    return SparsePoly.from_coeffs(var, acc)


def count_fixed_monomers(g, monomers: Iterable[int]) -> Fraction:
    """Weighted number of dimer coverings of the graph with ``monomers`` removed."""
    fixed = set(monomers)
    total = Fraction(0)
    for m, dims in _coverings(g, set(), fixed):
        w = Fraction(1)
        for d in dims:
            w *= g.dimer[d]
        total += w
    return total


def z_to_x(p: SparsePoly, z: str = "z", x: str = "x") -> SparsePoly:
    """Rewrite a polynomial in the per-monomer fugacity as one in the pair fugacity x = z^2."""
    return p.scale_exponents(z, Fraction(1, 2)).rename(z, x)


def x_to_z(p: SparsePoly, x: str = "x", z: str = "z") -> SparsePoly:
    return p.scale_exponents(x, 2).rename(x, z)
