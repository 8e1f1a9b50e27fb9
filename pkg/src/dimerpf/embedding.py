"""Planar graphs as rotation systems.

A graph stores, for every vertex, the counterclockwise cyclic order of its
neighbours.  Faces are traced with the face on the left: after the dart
``u -> v`` comes ``v -> w`` where ``w`` precedes ``u`` in the rotation of
``v``.  With this rule bounded faces are walked counterclockwise and the
outer walk of a component clockwise.

A rotation system does not say which walk of a component faces outwards, nor
which face of another component a component sits in.  Both facts are stored
explicitly: one outer dart per component with edges, and for nested
components a dart of the walk bounding the face that contains them.
"""

from __future__ import annotations

import functools
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import (
    CrossingEdges,
    DuplicateEdge,
    InvalidGraph,
    NotACircuit,
    NotMergeable,
    SelfLoop,
    TooLarge,
    UndirectedEdgeInCircuit,
)
from .poly import to_fraction

Dart = tuple[int, int]
Edge = frozenset
Orientation = dict  # frozenset({u, v}) -> (tail, head), read "tail ≻ head"

UNBOUNDED = -1


def edge(u: int, v: int) -> frozenset:
    return frozenset((u, v))


@dataclass(frozen=True)
class Face:
    darts: tuple[Dart, ...]
    bounded: bool

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(u for u, _ in self.darts)


@dataclass(frozen=True)
class Circuit:
    """Simple cycle listed counterclockwise, smallest vertex id first."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        vs = self.vertices
        if len(vs) < 3 or len(set(vs)) != len(vs):
            raise NotACircuit(f"not a simple cycle of length >= 3: {vs}")
        k = vs.index(min(vs))
        object.__setattr__(self, "vertices", tuple(vs[k:] + vs[:k]))

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def darts(self) -> list[Dart]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def edges(self) -> set[frozenset]:
        return {edge(u, v) for u, v in self.darts()}

    def reversed(self) -> tuple[int, ...]:
        return tuple(reversed(self.vertices))


class PlanarGraph:
    """Weighted planar graph with a fixed combinatorial embedding. Immutable."""

    def __init__(
        self,
        monomer: Mapping[int, object],
        dimer: Mapping[frozenset, object],
        rotation: Mapping[int, Sequence[int]],
        outer: Mapping[int, Dart | None] | Dart | None = None,
        nesting: Mapping[int, Dart] | None = None,
        coords: Mapping[int, tuple] | None = None,
    ):
        self.monomer: dict[int, Fraction] = {int(v): to_fraction(w) for v, w in monomer.items()}
        self.vertices: tuple[int, ...] = tuple(sorted(self.monomer))
        self.dimer: dict[frozenset, Fraction] = {}
        for e, w in dimer.items():
            e = frozenset(e)
            if len(e) != 2:
                raise SelfLoop(f"self-loop at {sorted(e)}")
            if not e <= self.monomer.keys():
                raise InvalidGraph(f"edge {sorted(e)} uses an unknown vertex")
            self.dimer[e] = to_fraction(w)
        self.rotation: dict[int, tuple[int, ...]] = {v: tuple(rotation.get(v, ())) for v in self.vertices}
        self.coords = {v: tuple(map(Fraction, p)) for v, p in coords.items()} if coords else None
        self._check_rotation()
        self._index = {v: {u: i for i, u in enumerate(r)} for v, r in self.rotation.items()}
        self._trace()
        self._set_outer(outer, nesting or {})

    # ------------------------------------------------------------------ construction
    @classmethod
    def from_coordinates(
        cls,
        points: Mapping[int, Sequence],
        edges: Mapping[tuple[int, int] | frozenset, object] | Iterable,
        monomer: Mapping[int, object] | None = None,
    ) -> "PlanarGraph":
        """Straight-line embedding; rotations by angle, outer walks by signed area."""
        pts = {int(v): (Fraction(p[0]), Fraction(p[1])) for v, p in points.items()}
        if len(set(pts.values())) != len(pts):
            raise InvalidGraph("coordinates are not pairwise distinct")
        dimer = _edge_weights(edges)
        for e in dimer:
            if not e <= pts.keys():
                raise InvalidGraph(f"edge {sorted(e)} uses an unknown vertex")
        _check_crossings(pts, dimer)
        nbrs: dict[int, list[int]] = {v: [] for v in pts}
        for e in dimer:
            u, v = tuple(e)
            nbrs[u].append(v)
            nbrs[v].append(u)
        rotation = {}
        for v, ns in nbrs.items():
            key = functools.cmp_to_key(lambda a, b, v=v: _angle_cmp(pts[v], pts[a], pts[b]))
            rotation[v] = sorted(ns, key=key)
        monomer = {v: (monomer or {}).get(v, 1) for v in pts}
        outer, nesting = _geometric_outer(pts, dimer, rotation)
        return cls(monomer, dimer, rotation, outer, nesting, coords=pts)

    @classmethod
    def from_rotation(
        cls,
        rotation: Mapping[int, Sequence[int]],
        outer: Mapping[int, Dart | None] | Dart | None,
        dimer: Mapping | None = None,
        monomer: Mapping[int, object] | None = None,
        nesting: Mapping[int, Dart] | None = None,
    ) -> "PlanarGraph":
        """Graph from a bare rotation system; unlisted weights default to 1."""
        dimer = dict(_edge_weights(dimer or {}))
        for v, ns in rotation.items():
            for u in ns:
                dimer.setdefault(edge(u, v), 1)
        monomer = {v: (monomer or {}).get(v, 1) for v in rotation}
        return cls(monomer, dimer, rotation, outer, nesting)

    def _check_rotation(self) -> None:
        seen: dict[frozenset, int] = {}
        for v, ns in self.rotation.items():
            if len(set(ns)) != len(ns):
                raise DuplicateEdge(f"vertex {v} lists a neighbour twice")
            for u in ns:
                if u == v:
                    raise SelfLoop(f"self-loop at {v}")
                e = edge(u, v)
                if e not in self.dimer:
                    raise InvalidGraph(f"rotation of {v} lists non-edge {sorted(e)}")
                seen[e] = seen.get(e, 0) + 1
        for e in self.dimer:
            if seen.get(e, 0) != 2:
                raise InvalidGraph(f"edge {sorted(e)} is not listed exactly once at each endpoint")

    def _trace(self) -> None:
        walks: list[tuple[Dart, ...]] = []
        walk_of: dict[Dart, int] = {}
        for v in self.vertices:
            for u in self.rotation[v]:
                d = (v, u)
                if d in walk_of:
                    continue
                cyc = []
                while d not in walk_of:
                    walk_of[d] = len(walks)
                    cyc.append(d)
                    d = self.next_dart(d)
                walks.append(tuple(cyc))
        self.walks = walks
        self.walk_of = walk_of
        comp: dict[int, int] = {}
        components: list[tuple[int, ...]] = []
        for s in self.vertices:
            if s in comp:
                continue
            cid = len(components)
            comp[s] = cid
            stack, members = [s], [s]
            while stack:
                x = stack.pop()
                for y in self.rotation[x]:
                    if y not in comp:
                        comp[y] = cid
                        members.append(y)
                        stack.append(y)
            components.append(tuple(sorted(members)))
        self.components = components
        self.comp_of = comp
        # genus-0 certificate per component; an isolated vertex counts one walk
        per_comp_walks = [0] * len(components)
        for w in walks:
            per_comp_walks[comp[w[0][0]]] += 1
        for cid, members in enumerate(components):
            ne = sum(len(self.rotation[v]) for v in members) // 2
            nw = per_comp_walks[cid] if ne else 1
            if len(members) - ne + nw != 2:
                raise InvalidGraph(f"rotation system of component {members} is not planar")

    def _set_outer(self, outer, nesting: Mapping[int, Dart]) -> None:
        if outer is None or (isinstance(outer, tuple) and len(outer) == 2 and isinstance(outer[0], int)):
            if len(self.components) > 1 and outer is not None:
                raise InvalidGraph("a single outer dart cannot describe several components")
            outer = {self.components[0][0]: outer} if self.components else {}
        outer_walk: dict[int, int | None] = {}
        for cid, members in enumerate(self.components):
            key = members[0]
            has_edges = any(self.rotation[v] for v in members)
            if not has_edges:
                outer_walk[cid] = None
                continue
            d = None
            for v, dd in outer.items():
                if dd is not None and self.comp_of.get(dd[0]) == cid:
                    d = tuple(dd)
            if d is None:
                raise InvalidGraph(f"component containing {key} needs an outer dart")
            if d not in self.walk_of:
                raise InvalidGraph(f"outer dart {d} is not a dart of the graph")
            outer_walk[cid] = self.walk_of[d]
        self.outer_walk = outer_walk
        parent: dict[int, int] = {}
        for v, d in nesting.items():
            cid = self.comp_of[v]
            d = tuple(d)
            if d not in self.walk_of:
                raise InvalidGraph(f"nesting dart {d} is not a dart of the graph")
            w = self.walk_of[d]
            host = self.comp_of[d[0]]
            if host == cid or w == outer_walk[host]:
                raise InvalidGraph(f"component of {v} must nest in a bounded face of another component")
            parent[cid] = w
        for cid in parent:
            seen = {cid}
            c = cid
            while c in parent:
                c = self.comp_of[self.walks[parent[c]][0][0]]
                if c in seen:
                    raise InvalidGraph("nesting relation has a cycle")
                seen.add(c)
        self.parent_walk = parent
        nested: dict[int, list[int]] = {}
        for cid, w in parent.items():
            nested.setdefault(w, []).append(cid)
        self.nested_in = nested

    # ------------------------------------------------------------------ basic access
    def next_dart(self, d: Dart) -> Dart:
        u, v = d
        r = self.rotation[v]
        return (v, r[self._index[v][u] - 1])

    def __len__(self) -> int:
        return len(self.vertices)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.rotation[v]

    def has_edge(self, u: int, v: int) -> bool:
        return edge(u, v) in self.dimer

    def weight(self, u: int, v: int) -> Fraction:
        return self.dimer[edge(u, v)]

    @property
    def edges(self) -> list[tuple[int, int]]:
        return sorted(tuple(sorted(e)) for e in self.dimer)

    def is_connected(self) -> bool:
        return len(self.components) <= 1

    def outer_dart(self, cid: int = 0) -> Dart | None:
        w = self.outer_walk[cid]
        return None if w is None else self.walks[w][0]

    def outer_darts(self) -> dict[int, Dart | None]:
        return {self.components[c][0]: self.outer_dart(c) for c in range(len(self.components))}

    def nesting(self) -> dict[int, Dart]:
        return {self.components[c][0]: self.walks[w][0] for c, w in self.parent_walk.items()}

    def is_top_level(self, cid: int) -> bool:
        return cid not in self.parent_walk

    @property
    def faces(self) -> list[Face]:
        outer = {w for w in self.outer_walk.values() if w is not None}
        return [Face(w, i not in outer) for i, w in enumerate(self.walks)]

    def face_count(self) -> int:
        """Number of regions of the plane (nested outer walks merge with their host)."""
        return len(self.walks) + sum(1 for w in self.outer_walk.values() if w is None) - len(self.components) + 1

    def euler_characteristic(self) -> int:
        return len(self.vertices) - len(self.dimer) + self.face_count()

    def with_weights(self, monomer: Mapping | None = None, dimer: Mapping | None = None) -> "PlanarGraph":
        m = dict(self.monomer)
        m.update({v: to_fraction(w) for v, w in (monomer or {}).items()})
        d = dict(self.dimer)
        d.update({frozenset(e): to_fraction(w) for e, w in (dimer or {}).items()})
        return PlanarGraph(m, d, self.rotation, self.outer_darts(), self.nesting(), self.coords)

    def relabel(self, mapping: Mapping[int, int]) -> "PlanarGraph":
        f = lambda v: mapping.get(v, v)  # noqa: E731
        return PlanarGraph(
            {f(v): w for v, w in self.monomer.items()},
            {frozenset(map(f, e)): w for e, w in self.dimer.items()},
            {f(v): [f(u) for u in r] for v, r in self.rotation.items()},
            {f(k): (None if d is None else (f(d[0]), f(d[1]))) for k, d in self.outer_darts().items()},
            {f(k): (f(d[0]), f(d[1])) for k, d in self.nesting().items()},
            {f(v): p for v, p in self.coords.items()} if self.coords else None,
        )

    def reversed_embedding(self, outer_walk_dart: Dart) -> "PlanarGraph":
        """Mirror image (all rotations reversed); ``outer_walk_dart`` picks the new outer walk.

        Walks of the mirror are the reversed walks of the original, so a
        bounded face can be declared the new unbounded one.  Connected graphs only.
        """
        if not self.is_connected():
            raise InvalidGraph("inside-out re-embedding needs a connected graph")
        rot = {v: tuple(reversed(r)) for v, r in self.rotation.items()}
        return PlanarGraph(self.monomer, self.dimer, rot, outer_walk_dart)

    # ------------------------------------------------------------------ regions
    def region_of_walk(self) -> dict[int, int]:
        """Map walk index -> region id; the unbounded region is ``UNBOUNDED``.

        A bounded walk is the outer boundary of its own region; the outer walk
        of a nested component lies in the region of its host walk.
        """
        reg: dict[int, int] = {}

        def host(cid: int) -> int:
            if cid not in self.parent_walk:
                return UNBOUNDED
            return self.parent_walk[cid]

        for i in range(len(self.walks)):
            cid = self.comp_of[self.walks[i][0][0]]
            reg[i] = host(cid) if self.outer_walk[cid] == i else i
        return reg

    def outer_region_darts(self) -> set[Dart]:
        out = set()
        for cid, w in self.outer_walk.items():
            if w is not None and cid not in self.parent_walk:
                out.update(self.walks[w])
        return out

    def boundary_subgraph(self) -> tuple[set[int], set[frozenset]]:
        """Vertices and edges touching the unbounded face."""
        darts = self.outer_region_darts()
        verts = {u for u, _ in darts}
        for cid, w in self.outer_walk.items():
            if w is None and cid not in self.parent_walk:
                verts.update(self.components[cid])
        return verts, {edge(u, v) for u, v in darts}

    def subgraph(self, vertices: Iterable[int] | None = None, edges: Iterable | None = None) -> "PlanarGraph":
        """Induced embedding on a vertex subset and (optionally) an edge subset.

        Regions of the subgraph are unions of regions of this graph glued
        across deleted edges, which fixes outer walks and nesting without
        coordinates.
        """
        keep_v = set(self.vertices if vertices is None else vertices)
        if edges is None:
            keep_e = {e for e in self.dimer if e <= keep_v}
        else:
            keep_e = {frozenset(e) for e in edges}
            if not all(e in self.dimer and e <= keep_v for e in keep_e):
                raise InvalidGraph("edge subset is not contained in the kept vertices")
        rotation = {v: [u for u in self.rotation[v] if edge(u, v) in keep_e] for v in keep_v}
        monomer = {v: self.monomer[v] for v in keep_v}
        dimer = {e: self.dimer[e] for e in keep_e}
        coords = {v: self.coords[v] for v in keep_v} if self.coords else None
        # union regions of self across removed edges
        reg = self.region_of_walk()
        uf = _UnionFind()
        for e in self.dimer:
            if e in keep_e:
                continue
            u, v = tuple(e)
            uf.union(reg[self.walk_of[(u, v)]], reg[self.walk_of[(v, u)]])
        # trace the subgraph and attach each of its walks to a region
        bare = PlanarGraph.__new__(PlanarGraph)
        bare.monomer, bare.vertices, bare.dimer = monomer, tuple(sorted(keep_v)), dimer
        bare.rotation = {v: tuple(r) for v, r in rotation.items()}
        bare.coords = None
        bare._index = {v: {u: i for i, u in enumerate(r)} for v, r in bare.rotation.items()}
        bare._trace()
        walk_region = {i: uf.find(reg[self.walk_of[w[0]]]) for i, w in enumerate(bare.walks)}
        root = uf.find(UNBOUNDED)
        # isolated vertices: region of any face around them in self
        iso_region = {}
        for cid, members in enumerate(bare.components):
            if not bare.rotation[members[0]]:
                v = members[0]
                if self.rotation[v]:
                    iso_region[cid] = uf.find(reg[self.walk_of[(v, self.rotation[v][0])]])
                else:
                    c0 = self.comp_of[v]
                    iso_region[cid] = uf.find(self.parent_walk[c0]) if c0 in self.parent_walk else root
        by_comp: dict[int, list[int]] = {}
        for i, w in enumerate(bare.walks):
            by_comp.setdefault(bare.comp_of[w[0][0]], []).append(i)
        # breadth-first over the containment tree, starting from the unbounded region
        outer: dict[int, Dart | None] = {}
        nesting: dict[int, Dart] = {}
        container_walk: dict[int, int] = {}  # region -> bare walk bounding it
        placed: set[int] = set()
        queue = deque([root])
        while queue:
            r = queue.popleft()
            for cid, members in enumerate(bare.components):
                if cid in placed:
                    continue
                if cid in iso_region:
                    if iso_region[cid] != r:
                        continue
                    outer[members[0]] = None
                else:
                    hits = [i for i in by_comp[cid] if walk_region[i] == r]
                    if not hits:
                        continue
                    ow = hits[0]
                    outer[members[0]] = bare.walks[ow][0]
                    for i in by_comp[cid]:
                        if i != ow:
                            container_walk[walk_region[i]] = i
                            queue.append(walk_region[i])
                placed.add(cid)
                if r != root:
                    nesting[members[0]] = bare.walks[container_walk[r]][0]
        if len(placed) != len(bare.components):
            raise InvalidGraph("could not place every component of the subgraph")
        return PlanarGraph(monomer, dimer, rotation, outer, nesting, coords)

    def delete_vertices(self, vs: Iterable[int]) -> "PlanarGraph":
        gone = set(vs)
        return self.subgraph([v for v in self.vertices if v not in gone])

    def delete_edges(self, es: Iterable) -> "PlanarGraph":
        gone = {frozenset(e) for e in es}
        return self.subgraph(self.vertices, [e for e in self.dimer if e not in gone])

    # ------------------------------------------------------------------ circuits
    def _flood(self, darts: Sequence[Dart], cedges: set[frozenset]) -> set[int] | None:
        """Walks reachable from the left of ``darts`` without crossing ``cedges``.

        Returns None when the outer walk of the circuit's component is reached.
        """
        cid = self.comp_of[darts[0][0]]
        target = self.outer_walk[cid]
        start = {self.walk_of[d] for d in darts}
        seen = set(start)
        stack = list(start)
        while stack:
            w = stack.pop()
            if w == target:
                return None
            for u, v in self.walks[w]:
                if edge(u, v) in cedges:
                    continue
                o = self.walk_of[(v, u)]
                if o not in seen:
                    seen.add(o)
                    stack.append(o)
        return seen

    def circuit(self, seq: Sequence[int]) -> Circuit:
        """Validate a cycle of this graph and return it counterclockwise."""
        seq = tuple(seq)
        if len(seq) < 3 or len(set(seq)) != len(seq):
            raise NotACircuit(f"{seq} is not a simple cycle of length >= 3")
        darts = [(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq))]
        for u, v in darts:
            if not self.has_edge(u, v):
                raise NotACircuit(f"{u}-{v} is not an edge")
        cedges = {edge(u, v) for u, v in darts}
        if self._flood(darts, cedges) is None:
            seq = tuple(reversed(seq))
        return Circuit(seq)

    def inside_walks(self, c: Circuit) -> set[int]:
        inside = self._flood(c.darts(), c.edges())
        if inside is None:
            raise NotACircuit(f"{c.vertices} is not counterclockwise in this embedding")
        return inside

    def enclosed_vertices(self, c: Circuit | Sequence[int]) -> set[int]:
        if not isinstance(c, Circuit):
            c = self.circuit(c)
        else:
            self._check_circuit(c)
        on = set(c.vertices)
        inside = self.inside_walks(c)
        out = {u for w in inside for u, _ in self.walks[w] if u not in on}
        stack = [cid for w in inside for cid in self.nested_in.get(w, [])]
        while stack:
            cid = stack.pop()
            out.update(self.components[cid])
            for v in self.components[cid]:
                for u in self.rotation[v]:
                    stack.extend(self.nested_in.get(self.walk_of[(v, u)], []))
        return out

    def enclosed_vertex_count(self, c: Circuit | Sequence[int]) -> int:
        return len(self.enclosed_vertices(c))

    def _check_circuit(self, c: Circuit) -> None:
        for u, v in c.darts():
            if not self.has_edge(u, v):
                raise NotACircuit(f"{u}-{v} is not an edge")

    def enumerate_simple_cycles(self, cap: int = 16) -> list[Circuit]:
        """Every simple cycle of length >= 3 exactly once, counterclockwise."""
        if len(self.vertices) > cap:
            raise TooLarge(f"exhaustive cycle enumeration is capped at {cap} vertices")
        out: list[Circuit] = []
        adj = {v: sorted(self.rotation[v]) for v in self.vertices}
        for s in self.vertices:
            path = [s]
            on_path = {s}

            def dfs(v: int) -> None:
                for u in adj[v]:
                    if u < s:
                        continue
                    if u == s:
                        if len(path) >= 3 and path[1] < path[-1]:
                            out.append(self.circuit(path))
                        continue
                    if u in on_path:
                        continue
                    path.append(u)
                    on_path.add(u)
                    dfs(u)
                    path.pop()
                    on_path.discard(u)

            dfs(s)
        return out

    def boundary_circuit(self) -> Circuit | None:
        """The outer face as a simple counterclockwise cycle, if it is one."""
        if not self.is_connected() or self.outer_walk[0] is None:
            return None
        walk = self.walks[self.outer_walk[0]]
        seq = [u for u, _ in reversed(walk)]
        if len(seq) < 3 or len(set(seq)) != len(seq):
            return None
        return Circuit(tuple(seq))

    def __repr__(self) -> str:
        return f"PlanarGraph(|V|={len(self.vertices)}, |E|={len(self.dimer)}, components={len(self.components)})"


# ---------------------------------------------------------------------- goodness and mergers


def backwards_count(orient: Orientation, c: Circuit) -> int:
    """Number of traversal steps ``a -> b`` whose edge is directed ``b ≻ a``."""
    n = 0
    for a, b in c.darts():
        d = orient.get(edge(a, b))
        if d is None:
            raise UndirectedEdgeInCircuit(f"edge {a}-{b} has no direction")
        if d == (b, a):
            n += 1
    return n


def circuit_is_good(g: PlanarGraph, orient: Orientation, c: Circuit | Sequence[int]) -> bool:
    if not isinstance(c, Circuit):
        c = g.circuit(c)
    return (backwards_count(orient, c) + g.enclosed_vertex_count(c)) % 2 == 1


def merge_circuits(c1: Circuit | Sequence[int], c2: Circuit | Sequence[int]) -> Circuit:
    """Glue two circuits along a common string traversed in opposite directions."""
    a = tuple(c1.vertices if isinstance(c1, Circuit) else c1)
    b = tuple(c2.vertices if isinstance(c2, Circuit) else c2)
    da = {(a[i], a[(i + 1) % len(a)]) for i in range(len(a))}
    db = {(b[i], b[(i + 1) % len(b)]) for i in range(len(b))}
    shared = {(u, v) for u, v in da if (v, u) in db}
    if not shared:
        raise NotMergeable("circuits share no reversed edge")
    # the shared darts must form one contiguous run of a
    n = len(a)
    flags = [(a[i], a[(i + 1) % n]) in shared for i in range(n)]
    if all(flags):
        raise NotMergeable("circuits coincide")
    start = next(i for i in range(n) if flags[i] and not flags[i - 1])
    run = 0
    while flags[(start + run) % n]:
        run += 1
    if run != len(shared):
        raise NotMergeable("shared edges do not form a single string")
    first, last = a[start], a[(start + run) % n]
    rest_a = [a[(start + run + k) % n] for k in range(n - run + 1)]  # last .. first
    m = len(b)
    j = b.index(first)
    rest_b = [b[(j + k) % m] for k in range(m - run + 1)]  # first .. last
    if rest_b[-1] != last:
        raise NotMergeable("shared string is not traversed in opposite directions")
    merged = rest_a + rest_b[1:-1]
    if len(set(merged)) != len(merged):
        raise NotMergeable("circuits touch outside their common string")
    return Circuit(tuple(merged))


# ---------------------------------------------------------------------- geometry helpers


class _UnionFind:
    def __init__(self):
        self.p: dict = {}

    def find(self, x):
        self.p.setdefault(x, x)
        while self.p[x] != x:
            self.p[x] = self.p[self.p[x]]
            x = self.p[x]
        return x

    def union(self, a, b) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # keep the unbounded marker as representative
            if rb == UNBOUNDED:
                ra, rb = rb, ra
            self.p[rb] = ra


def _edge_weights(edges) -> dict[frozenset, Fraction]:
    out: dict[frozenset, Fraction] = {}
    items = edges.items() if isinstance(edges, Mapping) else ((e, 1) for e in edges)
    for e, w in items:
        e = tuple(e)
        if len(e) != 2 or e[0] == e[1]:
            raise SelfLoop(f"self-loop or malformed edge {e}")
        k = edge(int(e[0]), int(e[1]))
        if k in out:
            raise DuplicateEdge(f"edge {sorted(k)} given twice")
        out[k] = to_fraction(w)
    return out


def _cross(o, a, b) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _angle_cmp(o, a, b) -> int:
    """Compare directions o->a and o->b by angle in [0, 2*pi)."""

    def half(p):
        dx, dy = p[0] - o[0], p[1] - o[1]
        return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1

    ha, hb = half(a), half(b)
    if ha != hb:
        return ha - hb
    c = _cross(o, a, b)
    return -1 if c > 0 else (1 if c < 0 else 0)


def _on_segment(p, q, r) -> bool:
    return min(p[0], r[0]) <= q[0] <= max(p[0], r[0]) and min(p[1], r[1]) <= q[1] <= max(p[1], r[1])


def _segments_meet(p1, p2, p3, p4) -> bool:
    d1, d2 = _cross(p3, p4, p1), _cross(p3, p4, p2)
    d3, d4 = _cross(p1, p2, p3), _cross(p1, p2, p4)
    if ((d1 > 0) != (d2 > 0)) and d1 != 0 and d2 != 0 and ((d3 > 0) != (d4 > 0)) and d3 != 0 and d4 != 0:
        return True
    return (
        (d1 == 0 and _on_segment(p3, p1, p4))
        or (d2 == 0 and _on_segment(p3, p2, p4))
        or (d3 == 0 and _on_segment(p1, p3, p2))
        or (d4 == 0 and _on_segment(p1, p4, p2))
    )


def _check_crossings(pts, dimer) -> None:
    segs = [tuple(sorted(e)) for e in dimer]
    for i in range(len(segs)):
        a, b = segs[i]
        for j in range(i + 1, len(segs)):
            c, d = segs[j]
            common = {a, b} & {c, d}
            if common:
                # segments sharing an endpoint may only overlap there (no collinear overlap)
                (s,) = common
                x = b if a == s else a
                y = d if c == s else c
                if _cross(pts[s], pts[x], pts[y]) == 0 and _on_segment(pts[s], pts[x], pts[y]) | _on_segment(
                    pts[s], pts[y], pts[x]
                ):
                    raise CrossingEdges(f"edges {segs[i]} and {segs[j]} overlap")
                continue
            if _segments_meet(pts[a], pts[b], pts[c], pts[d]):
                raise CrossingEdges(f"edges {segs[i]} and {segs[j]} cross")
    for v, p in pts.items():
        for a, b in segs:
            if v not in (a, b) and _cross(pts[a], pts[b], p) == 0 and _on_segment(pts[a], p, pts[b]):
                raise CrossingEdges(f"vertex {v} lies on edge {(a, b)}")


def _signed_area(pts, walk) -> Fraction:
    return sum((pts[u][0] * pts[v][1] - pts[v][0] * pts[u][1] for u, v in walk), Fraction(0)) / 2


def _winding(pts, walk, p) -> int:
    wn = 0
    for u, v in walk:
        a, b = pts[u], pts[v]
        if a[1] <= p[1]:
            if b[1] > p[1] and _cross(a, b, p) > 0:
                wn += 1
        elif b[1] <= p[1] and _cross(a, b, p) < 0:
            wn -= 1
    return wn


def _geometric_outer(pts, dimer, rotation):
    """Outer dart per component (most negative area walk) and nesting by winding numbers."""
    g = PlanarGraph.__new__(PlanarGraph)
    g.monomer = {v: Fraction(0) for v in pts}
    g.vertices = tuple(sorted(pts))
    g.dimer = dimer
    g.rotation = {v: tuple(r) for v, r in rotation.items()}
    g._index = {v: {u: i for i, u in enumerate(r)} for v, r in g.rotation.items()}
    g._trace()
    area = [_signed_area(pts, w) for w in g.walks]
    outer: dict[int, Dart | None] = {}
    outer_idx: dict[int, int] = {}
    for cid, members in enumerate(g.components):
        ws = [i for i, w in enumerate(g.walks) if g.comp_of[w[0][0]] == cid]
        if not ws:
            outer[members[0]] = None
            continue
        best = min(ws, key=lambda i: (area[i], i))
        outer_idx[cid] = best
        outer[members[0]] = g.walks[best][0]
    nesting: dict[int, Dart] = {}
    if len(g.components) > 1:
        for cid, members in enumerate(g.components):
            p = pts[members[0]]
            best = None
            for i, w in enumerate(g.walks):
                host = g.comp_of[w[0][0]]
                if host == cid or outer_idx.get(host) == i:
                    continue
                if _winding(pts, w, p) != 0 and (best is None or area[i] < area[best]):
                    best = i
            if best is not None:
                nesting[members[0]] = g.walks[best][0]
    return outer, nesting
