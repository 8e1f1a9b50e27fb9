"""Kasteleyn orientations, positive labelings, covering signs and the ring graph.

An orientation maps ``frozenset({u, v})`` to ``(tail, head)``; a labeling maps
vertices to ``1..|g|``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping

import networkx as nx

from .covering import Covering
from .embedding import Circuit, Orientation, PlanarGraph, backwards_count, edge
from .errors import (
    BadPartialOrientation,
    InvalidCovering,
    MonomerOffBoundary,
    NoCoveringExists,
    NotEnclosed,
    NotPerfectMatching,
    OddMonomerCount,
)
from .reduce import EnclosedGraph


def default_direction(u: int, v: int) -> tuple[int, int]:
    """Arbitrary choices direct the lower id towards the higher one."""
    return (u, v) if u < v else (v, u)


# ---------------------------------------------------------------------- orientation


class _Orienter:
    def __init__(self, g: PlanarGraph, partial: Mapping | None):
        self.g = g
        self.orient: Orientation = {}
        for e, d in (partial or {}).items():
            e = frozenset(e)
            if e not in g.dimer or set(d) != e:
                raise BadPartialOrientation(f"partial orientation mentions non-edge {sorted(e)}")
            self.orient[e] = tuple(d)
        self.block_of: dict[frozenset, int] = {}
        nxg = nx.Graph()
        nxg.add_nodes_from(g.vertices)
        nxg.add_edges_from(tuple(e) for e in g.dimer)
        for i, comp in enumerate(nx.biconnected_component_edges(nxg)):
            for u, v in comp:
                self.block_of[edge(u, v)] = i

    def run(self) -> Orientation:
        for cid in range(len(self.g.components)):
            w = self.g.outer_walk[cid]
            if w is not None and self.g.is_top_level(cid):
                self.process_walk(w, None)
        missing = [sorted(e) for e in self.g.dimer if e not in self.orient]
        if missing:
            raise BadPartialOrientation(f"edges left undirected: {missing[:5]}")
        return self.orient

    # each circuit gets undirected edges set low->high, then one flip fixes parity
    def make_good(self, c: Circuit, free: list[frozenset]) -> None:
        for e in free:
            self.orient[e] = default_direction(*tuple(e))
        good = (backwards_count(self.orient, c) + self.g.enclosed_vertex_count(c)) % 2 == 1
        if good:
            return
        if not free:
            raise BadPartialOrientation(f"pre-directed circuit {c.vertices} is not good")
        t, h = self.orient[free[0]]
        self.orient[free[0]] = (h, t)

    def process_walk(self, w: int, exclude_block: int | None) -> None:
        g = self.g
        darts = g.walks[w]
        in_walk = set(darts)
        per_block: dict[int, list[tuple[int, int]]] = {}
        for u, v in darts:
            e = edge(u, v)
            if (v, u) in in_walk:
                if e not in self.orient:
                    self.orient[e] = default_direction(u, v)
                continue
            b = self.block_of[e]
            if b != exclude_block:
                per_block.setdefault(b, []).append((u, v))
        for b in sorted(per_block, key=lambda b: min(min(d) for d in per_block[b])):
            seq = [u for u, _ in reversed(per_block[b])]
            c = Circuit(tuple(seq))
            free = [e for e in (edge(x, y) for x, y in c.darts()) if e not in self.orient]
            self.make_good(c, free)
            self.process_circuit(c, b)
        for cid in g.nested_in.get(w, []):
            self.process_walk(g.outer_walk[cid], None)

    def chord_path(self, c: Circuit, inside: set[int]) -> list[int] | None:
        g = self.g
        on = set(c.vertices)
        cedges = c.edges()
        inner_edges = set()
        for wi in inside:
            for u, v in g.walks[wi]:
                e = edge(u, v)
                if e not in cedges:
                    inner_edges.add(e)
        if not inner_edges:
            return None
        adj: dict[int, list[int]] = {}
        for e in inner_edges:
            u, v = tuple(e)
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
        best = None
        for s in sorted(on):
            if s not in adj:
                continue
            prev = {s: None}
            queue = deque([s])
            found = None
            while queue and found is None:
                x = queue.popleft()
                for y in sorted(adj[x]):
                    if y in prev:
                        continue
                    prev[y] = x
                    if y in on:
                        found = y
                        break
                    queue.append(y)
            if found is None:
                continue
            path = [found]
            while prev[path[-1]] is not None:
                path.append(prev[path[-1]])
            path.reverse()
            key = (len(path), path)
            if best is None or key < best:
                best = key
        return None if best is None else best[1]

    def process_circuit(self, c: Circuit, block: int) -> None:
        g = self.g
        inside = g.inside_walks(c)
        path = self.chord_path(c, inside)
        if path is None:
            (f0,) = {g.walk_of[d] for d in c.darts()}
            self.process_walk(f0, block)
            return
        vs = c.vertices
        i, j = vs.index(path[0]), vs.index(path[-1])
        n = len(vs)
        arc_ij = [vs[(i + k) % n] for k in range(((j - i) % n) + 1)]
        arc_ji = [vs[(j + k) % n] for k in range(((i - j) % n) + 1)]
        mid = path[1:-1]
        c1 = g.circuit(arc_ij + list(reversed(mid)))
        c2 = g.circuit(arc_ji + mid)
        pedges = [edge(a, b) for a, b in zip(path, path[1:])]
        free = [e for e in pedges if e not in self.orient]
        self.make_good(c1, free)
        for sub in (c1, c2):
            self.make_good(sub, [])
            self.process_circuit(sub, block)


def orient_kasteleyn(g: PlanarGraph, partial: Mapping | None = None) -> Orientation:
    """Extend ``partial`` to an orientation under which every circuit is good.

    Works face by face from the outside in: circuits bounding a biconnected
    piece are directed good, split along the shortest inner path joining two
    of their vertices (directed so that one half is good, which forces the
    other), and once no such path remains the face inside is handled the
    same way.  Edges no circuit constrains are directed low id -> high id.
    """
    return _Orienter(g, partial).run()


def verify_kasteleyn(g: PlanarGraph, orient: Orientation, cap: int = 16) -> bool:
    """Exhaustive check that every simple cycle is good."""
    for c in g.enumerate_simple_cycles(cap):
        if (backwards_count(orient, c) + g.enclosed_vertex_count(c)) % 2 == 0:
            return False
    return True


# ---------------------------------------------------------------------- signs and labelings


def covering_sign(orient: Orientation, labeling: Mapping[int, int], sigma: Covering) -> int:
    """Signature of the label sequence (tail, head, tail, head, ...) over the dimers."""
    seq: list[int] = []
    for d in sigma.dimers:
        if d not in orient:
            raise InvalidCovering(f"dimer {sorted(d)} is not a directed edge")
        t, h = orient[d]
        seq += [labeling[t], labeling[h]]
    if len(set(seq)) != len(seq):
        raise InvalidCovering("dimers overlap")
    inversions = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])
    return -1 if inversions % 2 else 1


def find_bmd_covering(E: EnclosedGraph) -> Covering:
    """A covering whose monomers all lie on the boundary circuit.

    Maximum-weight matching where an edge weighs its number of interior
    endpoints; a matching covering every interior vertex exists iff some
    boundary covering does.
    """
    g = E.graph
    interior = set(E.interior)
    nxg = nx.Graph()
    for e in g.dimer:
        u, v = tuple(e)
        w = (u in interior) + (v in interior)
        if w:
            nxg.add_edge(u, v, weight=w)
    m = nx.max_weight_matching(nxg, maxcardinality=False) if nxg.number_of_edges() else set()
    covered = {x for d in m for x in d}
    if not interior <= covered:
        raise NoCoveringExists("the interior cannot be matched")
    monomers = set(g.vertices) - covered
    return Covering.of(monomers, m)


def boundary_labeling(E: EnclosedGraph) -> tuple[Orientation, dict[int, int]]:
    """Boundary labeled 1..B counterclockwise, edges i ≻ i+1 and 1 ≻ B."""
    b = E.boundary
    lab = {v: i + 1 for i, v in enumerate(b)}
    orient: Orientation = {}
    B = len(b)
    for i in range(B - 1):
        orient[edge(b[i], b[i + 1])] = (b[i], b[i + 1])
    if B >= 3:
        orient[edge(b[0], b[-1])] = (b[0], b[-1])
    return orient, lab


def direct_and_label_enclosed(E: EnclosedGraph) -> tuple[Orientation, dict[int, int]]:
    """Kasteleyn orientation plus a labeling under which every boundary covering is positive."""
    if not isinstance(E, EnclosedGraph):
        raise NotEnclosed("expected an EnclosedGraph")
    g = E.graph
    partial, lab = boundary_labeling(E)
    orient = orient_kasteleyn(g, partial)
    nxt = len(E.boundary) + 1
    for v in E.interior:
        lab[v] = nxt
        nxt += 1
    try:
        sigma = find_bmd_covering(E)
    except NoCoveringExists:
        return orient, lab
    if covering_sign(orient, lab, sigma) < 0:
        a, b = sorted(E.interior, key=lambda v: lab[v])[-2:]
        lab[a], lab[b] = lab[b], lab[a]
    return orient, lab


# ---------------------------------------------------------------------- the ring graph


@dataclass(frozen=True)
class Gamma:
    """Enclosed graph wrapped in a ring; ``ring[k]`` carries label |g|+k+1."""

    graph: PlanarGraph
    orient: Orientation
    labeling: dict[int, int]
    boundary: tuple[int, ...]  # boundary vertices in label order
    ring: tuple[int, ...]
    base: EnclosedGraph

    def connector_edges(self) -> set[frozenset]:
        B = len(self.ring)
        out = set()
        for k in range(B):
            out.add(edge(self.boundary[k], self.ring[k]))
            out.add(edge(self.boundary[k], self.ring[k - 1]))
        return out


def build_auxiliary_gamma(E: EnclosedGraph, orient: Orientation, labeling: Mapping[int, int]) -> Gamma:
    """Add a ring r_1..r_B outside the boundary; r_k touches b_k and b_(k+1).

    Ring edges point from lower to higher label (r_1 ≻ r_B closes the ring),
    b_1 ≻ r_1, r_B ≻ b_1, b_(2j-1) ≻ r_(2j-1), r_(2j-2) and
    r_(2j), r_(2j-1) ≻ b_(2j).  Connector edges get the boundary vertex's
    monomer weight, ring edges weight 1.  A two-vertex ring would be a double
    edge; it is stored as a single edge of weight 2.
    """
    g = E.graph
    B = len(E.boundary)
    if B < 2 or B % 2:
        raise NotEnclosed("ring construction needs an even boundary circuit")
    N = len(g.vertices)
    b = sorted(E.boundary, key=lambda v: labeling[v])
    if [labeling[v] for v in b] != list(range(1, B + 1)):
        raise NotEnclosed("boundary vertices must carry labels 1..B")
    top = max(g.vertices) + 1
    r = [top + k for k in range(B)]
    rot = {v: list(x) for v, x in g.rotation.items()}
    if B == 2:
        # the base graph is a single edge; the ring vertex r_2 sits inside the triangle b_1 b_2 r_1
        b1, b2 = b
        r1, r2 = r
        rot[b1] = [b2, r2, r1]
        rot[b2] = [r1, r2, b1]
        rot[r1] = [b1, r2, b2]
        rot[r2] = [r1, b1, b2]
        outer_dart = (b1, r1)
    else:
        for k in range(B):
            i = rot[b[k]].index(b[k - 1])
            rot[b[k]][i + 1:i + 1] = [r[k - 1], r[k]]
        for k in range(B):
            rot[r[k]] = [r[(k + 1) % B], b[(k + 1) % B], b[k], r[k - 1]]
        outer_dart = (r[1], r[0])
    monomer = dict(g.monomer)
    dimer = dict(g.dimer)
    lab = dict(labeling)
    o = dict(orient)
    for k in range(B):
        monomer[r[k]] = 0
        lab[r[k]] = N + k + 1
    for k in range(B):
        # with two ring vertices the ring is a pair of parallel edges, merged into one of weight 2
        dimer[edge(r[k], r[(k + 1) % B])] = 2 if B == 2 else 1
        dimer[edge(b[k], r[k])] = g.monomer[b[k]]
        dimer[edge(b[(k + 1) % B], r[k])] = g.monomer[b[(k + 1) % B]]
    for k in range(B - 1):
        o[edge(r[k], r[k + 1])] = (r[k], r[k + 1])
    o[edge(r[0], r[-1])] = (r[0], r[-1])
    # connectors, 1-based j as in the labels
    o[edge(b[0], r[0])] = (b[0], r[0])
    o[edge(r[-1], b[0])] = (r[-1], b[0])
    for j in range(2, B // 2 + 1):
        bj = b[2 * j - 2]
        o[edge(bj, r[2 * j - 2])] = (bj, r[2 * j - 2])
        o[edge(bj, r[2 * j - 3])] = (bj, r[2 * j - 3])
    for j in range(1, B // 2 + 1):
        bj = b[2 * j - 1]
        o[edge(r[2 * j - 1], bj)] = (r[2 * j - 1], bj)
        o[edge(r[2 * j - 2], bj)] = (r[2 * j - 2], bj)
    gamma = PlanarGraph(monomer, dimer, rot, outer_dart)
    if gamma.euler_characteristic() != 2 or set(o) != set(dimer):
        raise NotEnclosed("ring construction produced an inconsistent graph")
    return Gamma(gamma, o, lab, tuple(b), tuple(r), E)


def _ring_dimers(gm: Gamma, monomer_labels: set[int], shift: int) -> set[frozenset]:
    b, r = gm.boundary, gm.ring
    B = len(b)
    out: set[frozenset] = set()
    p = shift
    for j in range(1, B + 1):
        if j in monomer_labels:
            if (j + p) % 2:
                out.add(edge(b[j - 1], r[j - 1]))
            else:
                out.add(edge(b[j - 1], r[j - 2]))
            p += 1
        elif (j + p) % 2 == 0:
            out.add(edge(r[j - 1], r[j - 2]))
    return out


def lambda_gamma(gm: Gamma, sigma: Covering, barred: bool = False) -> Covering:
    """Pure dimer covering of the ring graph encoding a boundary covering."""
    lab = gm.labeling
    B = len(gm.boundary)
    mons = {lab[v] for v in sigma.monomers}
    if any(m > B for m in mons):
        raise MonomerOffBoundary("monomer on an interior vertex")
    if len(mons) % 2:
        raise OddMonomerCount("odd number of monomers")
    dimers = set(sigma.dimers) | _ring_dimers(gm, mons, 1 if barred else 0)
    out = Covering(frozenset(), frozenset(dimers))
    out.validate(gm.graph.vertices, gm.graph.dimer)
    return out


def Lambda_gamma(gm: Gamma, Sigma: Covering) -> Covering:
    """Boundary covering of the base graph read off a dimer covering of the ring graph."""
    if Sigma.monomers:
        raise NotPerfectMatching("ring-graph covering has monomers")
    try:
        Sigma.validate(gm.graph.vertices, gm.graph.dimer)
    except InvalidCovering as exc:
        raise NotPerfectMatching(str(exc)) from exc
    ring = set(gm.ring)
    base = set(gm.base.graph.vertices)
    monomers = set()
    dimers = set()
    for d in Sigma.dimers:
        u, v = tuple(d)
        if u in base and v in base:
            dimers.add(d)
        elif u in base or v in base:
            monomers.add(u if u in base else v)
        elif not (u in ring and v in ring):
            raise NotPerfectMatching("unexpected dimer")
    return Covering(frozenset(monomers), frozenset(dimers))


def labels_to_vertices(labeling: Mapping[int, int]) -> dict[int, int]:
    return {lab: v for v, lab in labeling.items()}


def sign_preserved(gm: Gamma, orient: Orientation, labeling: Mapping[int, int], sigma: Covering) -> bool:
    """sign(sigma) on the base graph equals sign(lambda_gamma(sigma)) on the ring graph."""
    return covering_sign(orient, labeling, sigma) == covering_sign(gm.orient, gm.labeling, lambda_gamma(gm, sigma))


def all_covering_signs(orient: Orientation, labeling: Mapping[int, int], coverings: Iterable[Covering]) -> set[int]:
    return {covering_sign(orient, labeling, s) for s in coverings}
