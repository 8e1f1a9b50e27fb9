"""Full monomer-dimer partition functions, where monomers may sit anywhere.

Two reductions to boundary problems are provided:

* skeletons: drop a set R of edges so that every vertex reaches the outer
  face, then sum boundary partition functions of the skeleton with the
  endpoints of each matching of R removed;
* in/out splitting along a Hamiltonian cycle: the product of the boundary
  partition functions inside and outside the cycle, in shared symbolic
  weights, contains every covering of the whole graph, which coefficient
  extraction recovers.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping

from .corpus import grid
from .embedding import Circuit, PlanarGraph, edge
from .errors import (
    BadDimensions,
    InvalidGraph,
    InvalidSkeleton,
    NegativeDimerWeight,
    NonpositiveMonomerWeight,
    NonSquareWeight,
    NotHamiltonian,
    TooLarge,
)
from .oracle import z_to_x
from .partition import Pipeline, boundary_partition, build_A, prepare
from .pfaffian import pf_combinatorial
from .poly import SparsePoly
from .reduce import PAD, build_boundary_circuit, connect_components

HAMILTONIAN_CAP = 12
INOUT_CAP = 10


# ---------------------------------------------------------------------- skeletons


@dataclass(frozen=True)
class Skeleton:
    """A subgraph without internal vertices plus the weighted edges taken out of it."""

    s: PlanarGraph
    removed: dict[frozenset, Fraction]

    def validate(self) -> None:
        verts = set(self.s.vertices)
        on_outer = self.s.boundary_subgraph()[0]
        inner = sorted(verts - on_outer)
        if inner:
            raise InvalidSkeleton(f"vertices {inner} are not on the outer face of the skeleton")
        for e in self.removed:
            if len(e) != 2 or not e <= verts:
                raise InvalidSkeleton(f"removed edge {sorted(e)} has an unknown endpoint")
            if e in self.s.dimer:
                raise InvalidSkeleton(f"removed edge {sorted(e)} is still in the skeleton")

    def is_matching(self) -> bool:
        ends = [v for e in self.removed for v in e]
        return len(ends) == len(set(ends))

    def matchings(self) -> Iterator[tuple[frozenset, ...]]:
        """Every set of pairwise disjoint removed edges, in a fixed order."""
        edges = sorted(self.removed, key=sorted)

        def rec(k: int, used: frozenset, chosen: tuple):
            if k == len(edges):
                yield chosen
                return
            yield from rec(k + 1, used, chosen)
            e = edges[k]
            if not e & used:
                yield from rec(k + 1, used | e, chosen + (e,))

        yield from rec(0, frozenset(), ())


def build_skeleton_rectangle(L: int, M: int, mirror: bool = False) -> tuple[PlanarGraph, Skeleton]:
    """The L x M grid (L columns, L even) and a comb skeleton of it.

    For every column pair (a, a+1) with a = 1, 3, ..., L-3 the horizontal
    edges between them are cut on rows 0..M-3, opening a slot from the
    bottom side up to row M-2; ``mirror`` cuts rows 2..M-1 from the top
    instead.  The cut edges form a matching of size (L-2)(M-2)/2.
    """
    if L < 2 or M < 1 or L % 2:
        raise BadDimensions(f"need an even L >= 2 and M >= 1, got {L}x{M}")
    g = grid(M, L)  # vertex y*L + a sits at (a, y)
    rows = range(2, M) if mirror else range(0, M - 2)
    removed = {}
    for a in range(1, L - 2, 2):
        for y in rows:
            e = edge(y * L + a, y * L + a + 1)
            removed[e] = g.dimer[e]
    s = g.delete_edges(removed)
    sk = Skeleton(s, removed)
    sk.validate()
    if not sk.is_matching() or len(removed) != (L - 2) * max(M - 2, 0) // 2:
        raise InvalidSkeleton("rectangle skeleton construction broke its own invariants")
    return g, sk


def _check_against(g: PlanarGraph, sk: Skeleton) -> None:
    if set(g.vertices) != set(sk.s.vertices):
        raise InvalidSkeleton("skeleton and graph have different vertex sets")
    if any(g.monomer[v] != sk.s.monomer[v] for v in g.vertices):
        raise InvalidSkeleton("skeleton and graph disagree on monomer weights")
    want = dict(sk.s.dimer)
    want.update(sk.removed)
    if want != g.dimer:
        raise InvalidSkeleton("skeleton edges plus removed edges differ from the graph's edges")


def _skeleton_term(args: tuple[PlanarGraph, tuple[frozenset, ...], Fraction]) -> SparsePoly:
    s, mu, weight = args
    covered = {v for e in mu for v in e}
    sub = s.delete_vertices(covered) if covered else s
    return boundary_partition(sub, var="z") * weight


def full_partition_skeleton(
    g: PlanarGraph | None,
    sk: Skeleton,
    var: str = "x",
    executor=None,
    counter: Counter | None = None,
) -> SparsePoly:
    """Sum over matchings mu of R of prod_{e in mu} d_e times the boundary function of s - V(mu).

    ``g`` may be None when the graph is only known as skeleton plus removed
    edges (it need not be planar).  ``counter["pfaffians"]`` is increased
    by the number of polynomial Pfaffians computed.
    """
    sk.validate()
    if g is not None:
        _check_against(g, sk)
    jobs = []
    for mu in sk.matchings():
        w = Fraction(1)
        for e in mu:
            w *= sk.removed[e]
        if w:
            jobs.append((sk.s, mu, w))
    terms = executor.map(_skeleton_term, jobs) if executor is not None else map(_skeleton_term, jobs)
    total = SparsePoly()
    for t in terms:
        total = total + t
    if counter is not None:
        counter["pfaffians"] += len(jobs)
    return total if var == "z" else z_to_x(total)


# ---------------------------------------------------------------------- Hamiltonian cycles


@dataclass(frozen=True)
class HamiltonianCycle:
    graph: PlanarGraph  # the input, or its augmentation by 0-weight edges
    cycle: Circuit
    augmented: bool


def _search_cycle(g: PlanarGraph) -> list[int] | None:
    n = len(g.vertices)
    if n < 3:
        return None
    start = g.vertices[0]
    adj = {v: sorted(g.rotation[v]) for v in g.vertices}
    path, on = [start], {start}

    def rec() -> bool:
        v = path[-1]
        if len(path) == n:
            return start in adj[v]
        for u in adj[v]:
            if u in on:
                continue
            path.append(u)
            on.add(u)
            if rec():
                return True
            path.pop()
            on.discard(u)
        return False

    return path if rec() else None


def find_hamiltonian_cycle(g: PlanarGraph, augment: bool = True) -> HamiltonianCycle:
    """Backtracking search; failing that, shadow the outer face with 0-weight edges and retry.

    The augmentation adds no coverings of nonzero weight, so the full
    partition function is unchanged.
    """
    if len(g.vertices) > HAMILTONIAN_CAP:
        raise TooLarge(f"Hamiltonian search is capped at {HAMILTONIAN_CAP} vertices")
    seq = _search_cycle(g)
    if seq is not None:
        return HamiltonianCycle(g, g.circuit(seq), False)
    if augment and len(g.vertices) >= 3:
        h, _ = connect_components(g)
        h, _ = build_boundary_circuit(h)
        seq = _search_cycle(h)
        if seq is not None:
            return HamiltonianCycle(h, h.circuit(seq), True)
    raise NotHamiltonian("no Hamiltonian cycle found, even after shadowing the outer face")


# ---------------------------------------------------------------------- in/out splitting


def lam(v: int) -> str:
    return f"lam{v}"


def dlt(e: frozenset) -> str:
    u, v = sorted(e)
    return f"del{u}_{v}"


@dataclass(frozen=True)
class HamiltonianSplit:
    cycle: Circuit
    inside: PlanarGraph  # cycle plus the edges it encloses
    outside: PlanarGraph  # cycle plus the other edges, turned inside out
    chords_in: frozenset
    chords_out: frozenset

    @property
    def cycle_edges(self) -> set[frozenset]:
        return self.cycle.edges()


def split_along(g: PlanarGraph, c: Circuit) -> HamiltonianSplit:
    if set(c.vertices) != set(g.vertices):
        raise NotHamiltonian("the cycle does not visit every vertex")
    c = g.circuit(c.vertices)
    cedges = c.edges()
    inside = g.inside_walks(c)
    chords_in = frozenset(e for e in g.dimer if e not in cedges and g.walk_of[tuple(e)] in inside)
    chords_out = frozenset(e for e in g.dimer if e not in cedges and e not in chords_in)
    g_i = g.subgraph(g.vertices, cedges | chords_in)
    bar_e = g.subgraph(g.vertices, cedges | chords_out)
    v0, v1 = c.vertices[0], c.vertices[1]
    g_e = bar_e.reversed_embedding((v1, v0))
    for h in (g_i, g_e):
        if h.boundary_subgraph()[0] != set(g.vertices):
            raise InvalidGraph("in/out split left a vertex off the boundary")
    return HamiltonianSplit(c, g_i, g_e, chords_in, chords_out)


def _symbolic_pfaffian(h: PlanarGraph, caps: Mapping[str, int]) -> SparsePoly:
    """pf(A) for ``h`` with monomer weights lam_v and dimer weights del_e."""
    p: Pipeline = prepare(h)
    E = p.enclosed.graph
    pad = {v for v, tag in p.record.added_vertices if tag == PAD}
    ell = {}
    for v in E.vertices:
        if v in h.monomer:
            ell[v] = SparsePoly.var(lam(v), caps=caps)
        else:
            ell[v] = SparsePoly.constant(1 if v in pad else 0, caps)
    dimer = {e: SparsePoly.var(dlt(e), caps=caps) for e in h.dimer}
    A = build_A(E, p.orient, p.labeling, ell=ell, dimer=dimer, allow_interior=True)
    A = A.map(lambda v: SparsePoly.lift(v) if not isinstance(v, SparsePoly) else v)
    return SparsePoly.lift(pf_combinatorial(A, max_dim=A.n))


def inout_product(g: PlanarGraph, split: HamiltonianSplit) -> SparsePoly:
    """pf(A_i) * pf(A_e) truncated at the degrees the extraction can use."""
    cedges = split.cycle_edges
    caps = {lam(v): 2 for v in g.vertices}
    caps.update({dlt(e): (2 if e in cedges else 1) for e in g.dimer})
    return _symbolic_pfaffian(split.inside, caps) * _symbolic_pfaffian(split.outside, caps)


def extract_full(g: PlanarGraph, split: HamiltonianSplit, product: SparsePoly, var: str = "z") -> SparsePoly:
    """Apply the derivative operators at zero, with lam_v weights ``m_v * var``.

    A monomial survives only if every cycle edge appears squared or not at
    all, every chord at most once, and each vertex's remaining lam-degree
    after the chords' endpoints is 0 or 2.
    """
    cedges = split.cycle_edges
    by_name = {dlt(e): e for e in g.dimer}
    out: dict[int, Fraction] = {}
    for mono, c in product.items():
        degs = dict(mono)
        weight = Fraction(c)
        lam_left = {v: degs.get(lam(v), 0) for v in g.vertices}
        ok = True
        for name, k in mono:
            if name not in by_name:
                continue
            e = by_name[name]
            d = g.dimer[e]
            if e in cedges:
                if k != 2:
                    ok = False
                    break
                weight *= d  # (d/2) * 2!
            else:
                if k != 1:
                    ok = False
                    break
                weight *= d
                for v in e:
                    # one derivative per endpoint; the running degrees build up a_v!
                    weight *= lam_left[v]
                    lam_left[v] -= 1
        if not ok or weight == 0:
            continue
        monomers = 0
        for v, k in lam_left.items():
            if k < 0 or k == 1:
                ok = False
                break
            if k == 2:
                weight *= g.monomer[v]  # (m/2) * 2!
                monomers += 1
        if not ok or weight == 0:
            continue
        out[monomers] = out.get(monomers, Fraction(0)) + weight
    return SparsePoly.from_coeffs(var, out)


def full_partition_inout(g: PlanarGraph, c: Circuit | None = None, var: str = "x") -> SparsePoly:
    """Full partition function from two Pfaffians split along a Hamiltonian cycle."""
    if len(g.vertices) > INOUT_CAP:
        raise TooLarge(f"the in/out method is capped at {INOUT_CAP} vertices")
    if c is None:
        hc = find_hamiltonian_cycle(g)
        g, c = hc.graph, hc.cycle
    split = split_along(g, c)
    poly = extract_full(g, split, inout_product(g, split), "z")
    return poly if var == "z" else z_to_x(poly)


# ---------------------------------------------------------------------- upper bound


def _exact_sqrt(q: Fraction, what: str) -> Fraction:
    q = Fraction(q)
    rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if rn * rn != q.numerator or rd * rd != q.denominator:
        raise NonSquareWeight(f"{what} weight {q} is not the square of a rational")
    return Fraction(rn, rd)


def upper_bound_poly(g: PlanarGraph, c: Circuit | None = None, var: str = "z") -> SparsePoly:
    """pf(A_i) pf(A_e) with lam_v = sqrt(l_v), del_e = sqrt(d_e) on the cycle and
    sqrt(d_e) / sqrt(l_v l_v') off it, where l_v = m_v * var.

    The result is a Laurent polynomial in ``var`` with half-integer powers.
    """
    if any(w <= 0 for w in g.monomer.values()):
        raise NonpositiveMonomerWeight("every monomer weight must be positive")
    if any(d < 0 for d in g.dimer.values()):
        raise NegativeDimerWeight("dimer weights must be non-negative")
    if c is None:
        hc = find_hamiltonian_cycle(g, augment=False)
        c = hc.cycle
    split = split_along(g, c)
    cedges = split.cycle_edges
    root = {v: _exact_sqrt(g.monomer[v], f"monomer {v}") for v in g.vertices}
    half = Fraction(1, 2)
    subs = {lam(v): SparsePoly.var(var, half, root[v]) for v in g.vertices}
    for e, d in g.dimer.items():
        rd = _exact_sqrt(d, f"dimer {sorted(e)}")
        if e in cedges:
            subs[dlt(e)] = SparsePoly.constant(rd)
        else:
            u, v = tuple(e)
            subs[dlt(e)] = SparsePoly.var(var, -1, rd / (root[u] * root[v]))
    product = _symbolic_pfaffian(split.inside, {}) * _symbolic_pfaffian(split.outside, {})
    return product.substitute(subs)
