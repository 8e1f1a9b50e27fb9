"""Boundary monomer-dimer partition functions, correlations and the lower bound.

Polynomials are returned in the pair fugacity ``x`` (one power per pair of
monomers) or in ``z`` (one power per monomer, ``x = z^2``).  Odd graphs are
padded with a vertex that always carries a monomer; its factor ``z`` is
divided out again, which leaves half-integer powers of ``x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from .embedding import Orientation, PlanarGraph
from .errors import IndexOffBoundary, NegativeDimerWeight, NonzeroInteriorMonomer, NoPerfectMatching
from .kasteleyn import build_auxiliary_gamma, direct_and_label_enclosed
from .oracle import x_to_z, z_to_x
from .pfaffian import SkewMatrix, pf_combinatorial, pf_elimination, pf_univariate, skew_inverse, sub_pfaffian
from .poly import SparsePoly
from .reduce import PAD, AugmentationRecord, EnclosedGraph, to_enclosed


@dataclass
class Pipeline:
    """Everything the boundary formula needs, kept for inspection."""

    source: PlanarGraph
    enclosed: EnclosedGraph
    record: AugmentationRecord
    orient: Orientation
    labeling: dict[int, int]
    padded: bool

    @property
    def order(self) -> list[int]:
        """Vertices in label order (matrix row i is ``order[i]``)."""
        return sorted(self.labeling, key=self.labeling.get)


def prepare(g: PlanarGraph) -> Pipeline:
    """Zero interior monomer weights, reduce to an enclosed graph, orient and label."""
    boundary = g.boundary_subgraph()[0]
    g0 = g.with_weights(monomer={v: 0 for v in g.vertices if v not in boundary})
    E, rec = to_enclosed(g0, pad_weight=1)
    orient, lab = direct_and_label_enclosed(E)
    padded = any(tag == PAD for _, tag in rec.added_vertices)
    return Pipeline(g, E, rec, orient, lab, padded)


def build_A(
    g: PlanarGraph,
    orient: Orientation,
    labeling: Mapping[int, int],
    symbolic: bool = False,
    var: str = "x",
    ell: Mapping[int, object] | None = None,
    interior: Sequence[int] = (),
    allow_interior: bool = False,
    dimer: Mapping[frozenset, object] | None = None,
) -> SkewMatrix:
    """``A_ij = a_ij - (-1)^(i+j) l_i l_j`` in label order.

    ``a_ij`` is ``+d`` when the edge points from label i to label j.  With
    ``symbolic`` the product ``l_i l_j`` becomes ``m_i m_j var``; ``ell``
    replaces the graph's monomer weights by arbitrary ring elements and
    ``dimer`` does the same for edge weights (edges not listed keep theirs).
    """
    order = sorted(labeling, key=labeling.get)
    n = len(order)
    weights = {v: (ell[v] if ell is not None else g.monomer[v]) for v in order}
    if not allow_interior:
        bad = [v for v in interior if weights[v] != 0]
        if bad:
            raise NonzeroInteriorMonomer(f"interior vertices {bad} carry monomer weight")
    pos = {v: i for i, v in enumerate(order)}
    zero = SparsePoly() if symbolic else 0
    rows = [[zero] * n for _ in range(n)]
    for e, d in g.dimer.items():
        if dimer is not None and e in dimer:
            d = dimer[e]
        t, h = orient[e]
        i, j = pos[t], pos[h]
        rows[i][j] = rows[i][j] + d
        rows[j][i] = rows[j][i] - d
    x = SparsePoly.var(var) if symbolic else None
    for i in range(n):
        wi = weights[order[i]]
        if wi == 0:
            continue
        for j in range(i + 1, n):
            wj = weights[order[j]]
            if wj == 0:
                continue
            prod = wi * wj * x if symbolic else wi * wj
            # 0-based i+j has the parity of the 1-based index sum
            v = rows[i][j] - prod if (i + j) % 2 == 0 else rows[i][j] + prod
            rows[i][j] = v
            rows[j][i] = -v
    return SkewMatrix(rows, check=False)


def _finish(poly_z: SparsePoly, padded: bool, var: str) -> SparsePoly:
    if padded:
        poly_z = poly_z * SparsePoly.var("z", -1)
    return poly_z if var == "z" else z_to_x(poly_z)


def boundary_partition(g: PlanarGraph, var: str = "x", pipeline: Pipeline | None = None) -> SparsePoly:
    """Boundary monomer-dimer partition function as one Pfaffian."""
    if not g.vertices:
        return SparsePoly.constant(1)
    p = pipeline or prepare(g)
    A = build_A(p.enclosed.graph, p.orient, p.labeling, symbolic=True, var="x", interior=p.enclosed.interior)
    pf_x = pf_univariate(A, "x", degree_bound=1)
    return _finish(x_to_z(pf_x), p.padded, var)


def gamma_matrix(p: Pipeline, var: str = "z") -> tuple[SkewMatrix, object]:
    """Kasteleyn matrix of the ring graph with connectors weighted ``m_v * var``."""
    gm = build_auxiliary_gamma(p.enclosed, p.orient, p.labeling)
    G = gm.graph
    order = sorted(gm.labeling, key=gm.labeling.get)
    pos = {v: i for i, v in enumerate(order)}
    connectors = gm.connector_edges()
    n = len(order)
    rows = [[SparsePoly()] * n for _ in range(n)]
    z = SparsePoly.var(var)
    for e, d in G.dimer.items():
        t, h = gm.orient[e]
        if e in connectors:
            (bv,) = [v for v in e if v in p.enclosed.graph.monomer]
            w = p.enclosed.graph.monomer[bv] * z
        else:
            w = SparsePoly.constant(d)
        i, j = pos[t], pos[h]
        rows[i][j] = w
        rows[j][i] = -w
    return SkewMatrix(rows, check=False), gm


def boundary_partition_bijection(g: PlanarGraph, var: str = "x", pipeline: Pipeline | None = None) -> SparsePoly:
    """Half the dimer partition function of the ring graph."""
    if not g.vertices:
        return SparsePoly.constant(1)
    p = pipeline or prepare(g)
    K, _ = gamma_matrix(p, "z")
    pf_z = pf_univariate(K, "z", degree_bound=1) * Fraction(1, 2)
    return _finish(pf_z, p.padded, var)


# ---------------------------------------------------------------------- correlations


def kasteleyn_matrix(p: Pipeline) -> SkewMatrix:
    return build_A(p.enclosed.graph, p.orient, p.labeling, ell={v: 0 for v in p.labeling})


def _boundary_labels(p: Pipeline, vertices: Sequence[int]) -> list[int]:
    boundary = p.source.boundary_subgraph()[0]
    for v in vertices:
        if v not in boundary:
            raise IndexOffBoundary(f"vertex {v} is not on the boundary")
    if len(set(vertices)) != len(vertices):
        raise IndexOffBoundary("repeated vertex")
    return sorted(p.labeling[v] for v in vertices)


def monomer_correlation(g: PlanarGraph, vertices: Sequence[int], pipeline: Pipeline | None = None) -> Fraction:
    """Close-packed correlation of boundary monomers: pf([a]_I) / pf(a)."""
    p = pipeline or prepare(g)
    labels = _boundary_labels(p, vertices)
    if len(labels) % 2:
        raise IndexOffBoundary("need an even number of monomer positions")
    a = kasteleyn_matrix(p)
    z = pf_elimination(a)
    if z == 0:
        raise NoPerfectMatching("graph has no dimer covering")
    return sub_pfaffian(a, [l - 1 for l in labels], pf_elimination) / z


def two_point_matrix(p: Pipeline) -> list[list[Fraction]]:
    """Two-point correlations: entry (i, j) is the correlation of labels i+1, j+1.

    pf([a]_{i,j}) / pf(a) = (-1)^(i+j) (a^{-1})_{ij}, which is ``-a^{-1}`` only
    when i + j is odd; the parity factor keeps the Wick rule exact for every
    index tuple.
    """
    a = kasteleyn_matrix(p)
    if pf_elimination(a) == 0:
        raise NoPerfectMatching("graph has no dimer covering")
    inv = skew_inverse(a)
    return [[v if (i + j) % 2 == 0 else -v for j, v in enumerate(row)] for i, row in enumerate(inv)]


def wick_correlation(g: PlanarGraph, vertices: Sequence[int], pipeline: Pipeline | None = None) -> Fraction:
    """Pfaffian of the matrix of two-point correlations among ``vertices``."""
    p = pipeline or prepare(g)
    labels = _boundary_labels(p, vertices)
    if len(labels) % 2:
        raise IndexOffBoundary("need an even number of monomer positions")
    m = two_point_matrix(p)
    rows = [[m[i - 1][j - 1] for j in labels] for i in labels]
    return pf_elimination(SkewMatrix(rows, check=False))


def off_close_packing_correlations(
    g: PlanarGraph, ell: Mapping[int, object], vertices: Sequence[int]
) -> tuple[Fraction, Fraction]:
    """Derivative correlations at finite monomer weights, direct vs. Wick-assembled.

    The boundary partition function is multilinear in the weights, with
    coefficient ``pf([a]_M)`` for monomer set M; derivatives are sums of
    those.  Both values are normalised by the close-packed partition function.
    Returns ``(direct, wick)``; they agree at zero weights but not in general.
    """
    p = prepare(g)
    labels = _boundary_labels(p, vertices)
    a = kasteleyn_matrix(p)
    z0 = pf_elimination(a)
    if z0 == 0:
        raise NoPerfectMatching("graph has no dimer covering")
    lab_ell = {p.labeling[v]: Fraction(ell.get(v, 0)) for v in p.source.boundary_subgraph()[0]}
    free = sorted(lab_ell)

    def deriv(fixed: Sequence[int]) -> Fraction:
        rest = [l for l in free if l not in fixed]
        total = Fraction(0)
        for k in range(0, len(rest) + 1):
            if (k + len(fixed)) % 2:
                continue
            for extra in combinations(rest, k):
                w = Fraction(1)
                for l in extra:
                    w *= lab_ell[l]
                if w:
                    total += w * sub_pfaffian(a, [l - 1 for l in sorted(set(fixed) | set(extra))], pf_elimination)
        return total / z0

    direct = deriv(labels)
    m = len(labels)
    rows = [[Fraction(0)] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            v = deriv([labels[i], labels[j]])
            rows[i][j], rows[j][i] = v, -v
    return direct, pf_elimination(SkewMatrix(rows, check=False))


# ---------------------------------------------------------------------- lower bound


def lower_bound_poly(g: PlanarGraph, orient: Orientation, labeling: Mapping[int, int]) -> dict[frozenset, Fraction]:
    """Coefficient of prod_{v in M} l_v in pf(A(l)) for each monomer set M.

    Any orientation and labeling may be used; each coefficient is a signed
    sum over the dimer coverings of the graph with M removed.  An odd vertex
    count gives an odd matrix, whose Pfaffian vanishes, so the result is empty.
    """
    if any(d < 0 for d in g.dimer.values()):
        raise NegativeDimerWeight("dimer weights must be non-negative")
    if len(g.vertices) % 2:
        return {}
    names = {v: f"l{v}" for v in g.vertices}
    ell = {v: SparsePoly.var(names[v]) for v in g.vertices}
    A = build_A(g, orient, labeling, ell=ell, allow_interior=True)
    A = A.map(SparsePoly.lift)
    pf = pf_combinatorial(A, max_dim=max(12, A.n)) if A.n else SparsePoly.constant(1)
    pf = SparsePoly.lift(pf)
    back = {name: v for v, name in names.items()}
    out: dict[frozenset, Fraction] = {}
    for mono, c in pf.items():
        out[frozenset(back[name] for name, _ in mono)] = c
    return out
