"""Surgeries turning an arbitrary planar graph into an enclosed graph.

Every added edge has dimer weight 0 (except the forced edge of the parity
gadget, weight 1) and every added vertex monomer weight 0, except the padding
vertex used to make the vertex count even, which must carry a monomer and is
given the caller's chosen weight.  None of the surgeries changes which
boundary coverings exist with nonzero weight.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .embedding import Circuit, PlanarGraph, edge
from .errors import BoundaryAlreadyEven, InvalidGraph, NotConnected, NotEnclosed

CONNECTOR = "component-connector"
BOUNDARY = "boundary-circuit"
GADGET = "parity-gadget"
PAD = "evenness-pad"


@dataclass
class AugmentationRecord:
    added_edges: list[tuple[tuple[int, int], str]] = field(default_factory=list)
    added_vertices: list[tuple[int, str]] = field(default_factory=list)
    id_map: dict[int, int] = field(default_factory=dict)

    def extend(self, other: "AugmentationRecord") -> "AugmentationRecord":
        self.added_edges += other.added_edges
        self.added_vertices += other.added_vertices
        return self

    def to_json(self) -> dict:
        return {
            "added_edges": [{"u": u, "v": v, "tag": tag} for (u, v), tag in self.added_edges],
            "added_vertices": [{"id": v, "tag": tag} for v, tag in self.added_vertices],
            "id_map": {str(k): v for k, v in sorted(self.id_map.items())},
        }


@dataclass(frozen=True)
class EnclosedGraph:
    """Connected graph whose outer face is a simple even circuit."""

    graph: PlanarGraph
    boundary: tuple[int, ...]  # counterclockwise, smallest id first
    interior: tuple[int, ...]

    @classmethod
    def certify(cls, g: PlanarGraph) -> "EnclosedGraph":
        if not g.is_connected():
            raise NotEnclosed("graph is not connected")
        if len(g.vertices) % 2:
            raise NotEnclosed("odd number of vertices")
        if len(g.vertices) == 0:
            return cls(g, (), ())
        seq = _outer_sequence(g)
        if len(set(seq)) != len(seq):
            raise NotEnclosed("outer face is not a simple circuit")
        if len(seq) % 2:
            raise NotEnclosed("boundary circuit has odd length")
        k = seq.index(min(seq))
        seq = tuple(seq[k:] + seq[:k])
        interior = tuple(v for v in g.vertices if v not in set(seq))
        return cls(g, seq, interior)

    def circuit(self) -> Circuit | None:
        return Circuit(self.boundary) if len(self.boundary) >= 3 else None


def _outer_sequence(g: PlanarGraph) -> list[int]:
    """Outer face of a connected graph as a counterclockwise vertex string (with repeats)."""
    d = g.outer_dart(0)
    if d is None:
        return list(g.vertices)
    walk = g.walks[g.walk_of[d]]
    return [u for u, _ in reversed(walk)]


def _insert_before(rot: dict[int, list[int]], v: int, new: int, anchor: int) -> None:
    r = rot[v]
    r.insert(r.index(anchor), new)


def _insert_after(rot: dict[int, list[int]], v: int, new: int, anchor: int) -> None:
    r = rot[v]
    r.insert(r.index(anchor) + 1, new)


def _outer_corner(g: PlanarGraph, cid: int, v: int) -> int | None:
    """Anchor for inserting a new neighbour of ``v`` into the outer face of its component."""
    w = g.outer_walk[cid]
    if w is None:
        return None
    for x, y in g.walks[w]:
        if y == v:
            return x
    raise InvalidGraph(f"vertex {v} is not on the outer walk of its component")


def _attach_vertex(g: PlanarGraph, cid: int) -> int:
    """Smallest vertex on the outer walk of a component."""
    w = g.outer_walk[cid]
    if w is None:
        return g.components[cid][0]
    return min(u for u, _ in g.walks[w])


def pad_to_even(g: PlanarGraph, weight=1) -> tuple[PlanarGraph, AugmentationRecord]:
    """Add one isolated vertex (top level) when the vertex count is odd."""
    rec = AugmentationRecord(id_map={v: v for v in g.vertices})
    if len(g.vertices) % 2 == 0:
        return g, rec
    p = max(g.vertices, default=-1) + 1
    monomer = dict(g.monomer)
    monomer[p] = Fraction(weight)
    rotation = {v: list(r) for v, r in g.rotation.items()}
    rotation[p] = []
    outer = g.outer_darts()
    outer[p] = None
    rec.added_vertices.append((p, PAD))
    return PlanarGraph(monomer, g.dimer, rotation, outer, g.nesting()), rec


def connect_components(g: PlanarGraph) -> tuple[PlanarGraph, AugmentationRecord]:
    """Join all components by 0-weight edges drawn inside the faces that contain them.

    Top-level components are chained in order of their smallest vertex, each
    link joining the smallest vertices on their outer walks through the
    unbounded face.  A nested component is tied from the smallest vertex on
    its outer walk to the first vertex of the face walk hosting it.
    """
    rec = AugmentationRecord(id_map={v: v for v in g.vertices})
    if len(g.components) <= 1:
        return g, rec
    rot = {v: list(r) for v, r in g.rotation.items()}
    dimer = dict(g.dimer)
    plans: list[tuple[int, int | None, int, int | None]] = []  # (a, anchor at a, b, anchor at b)
    top = [cid for cid in range(len(g.components)) if g.is_top_level(cid)]
    for c1, c2 in zip(top, top[1:]):
        a, b = _attach_vertex(g, c1), _attach_vertex(g, c2)
        plans.append((a, _outer_corner(g, c1, a), b, _outer_corner(g, c2, b)))
    for cid, hw in sorted(g.parent_walk.items()):
        a = _attach_vertex(g, cid)
        x, b = g.walks[hw][0]  # corner at b between x -> b and the next dart of the host walk
        plans.append((a, _outer_corner(g, cid, a), b, x))
    for a, anc_a, b, anc_b in plans:
        for v, new, anc in ((a, b, anc_a), (b, a, anc_b)):
            if anc is None:
                rot[v].append(new)
            else:
                _insert_before(rot, v, new, anc)
        dimer[edge(a, b)] = Fraction(0)
        rec.added_edges.append(((min(a, b), max(a, b)), CONNECTOR))
    c0 = top[0]
    outer = g.outer_dart(c0)
    if outer is None:
        a, _, b, _ = plans[0]
        outer = (a, b)
    out = PlanarGraph(g.monomer, dimer, rot, outer)
    if not out.is_connected():
        raise InvalidGraph("connector insertion failed to connect the graph")
    return out, rec


def build_boundary_circuit(g: PlanarGraph) -> tuple[PlanarGraph, AugmentationRecord]:
    """Shadow the outer walk with 0-weight edges so the outer face becomes a simple circuit.

    The counterclockwise outer string is started at the smallest vertex,
    repeated vertices are erased keeping first appearances, and consecutive
    survivors that are not adjacent get an edge routed through the outer
    corners where they were visited.
    """
    if not g.is_connected():
        raise NotConnected("build_boundary_circuit needs a connected graph")
    rec = AugmentationRecord(id_map={v: v for v in g.vertices})
    if len(g.vertices) <= 1 or not g.dimer:
        return g, rec
    s = _outer_sequence(g)
    k = s.index(min(s))
    s = s[k:] + s[:k]
    n = len(s)
    kept_idx: list[int] = []
    seen: set[int] = set()
    for i, v in enumerate(s):
        if v not in seen:
            seen.add(v)
            kept_idx.append(i)
    kept = [s[i] for i in kept_idx]
    if len(kept) == n:
        return g, rec
    rot = {v: list(r) for v, r in g.rotation.items()}
    dimer = dict(g.dimer)
    m = len(kept_idx)
    for j in range(m):
        i, i2 = kept_idx[j], kept_idx[(j + 1) % m]
        a, b = s[i], s[i2]
        if g.has_edge(a, b) or (m == 2 and j == 1):
            continue
        _insert_before(rot, a, b, s[(i + 1) % n])
        _insert_after(rot, b, a, s[(i2 - 1) % n])
        dimer[edge(a, b)] = Fraction(0)
        rec.added_edges.append(((min(a, b), max(a, b)), BOUNDARY))
    out = PlanarGraph(g.monomer, dimer, rot, (kept[1], kept[0]))
    got = _outer_sequence(out)
    k = got.index(kept[0])
    if got[k:] + got[:k] != kept:
        raise InvalidGraph(f"boundary shadowing produced outer string {got}, expected {kept}")
    return out, rec


def evenize_boundary(g: PlanarGraph) -> tuple[PlanarGraph, AugmentationRecord]:
    """Lengthen an odd boundary circuit by one with a pendant gadget.

    The boundary edge {u, v} with the smallest sorted endpoint pair is kept,
    a new boundary vertex w is joined to u and v by 0-weight edges, and a
    pendant t hangs from w by a weight-1 edge inside the face u-w-v.  Since
    t can never hold a monomer, w is always matched to t.
    """
    rec = AugmentationRecord(id_map={v: v for v in g.vertices})
    seq = _outer_sequence(g)
    if not g.is_connected() or len(set(seq)) != len(seq):
        raise NotEnclosed("graph has no boundary circuit")
    if len(seq) % 2 == 0:
        raise BoundaryAlreadyEven(f"boundary circuit already has even length {len(seq)}")
    darts = [(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq))]
    u, v = min(darts, key=lambda d: tuple(sorted(d)))
    w = max(g.vertices) + 1
    t = w + 1
    rot = {x: list(r) for x, r in g.rotation.items()}
    _insert_before(rot, u, w, v)
    _insert_after(rot, v, w, u)
    rot[w] = [v, t, u]
    rot[t] = [w]
    monomer = dict(g.monomer)
    monomer[w] = Fraction(0)
    monomer[t] = Fraction(0)
    dimer = dict(g.dimer)
    dimer[edge(u, w)] = Fraction(0)
    dimer[edge(w, v)] = Fraction(0)
    dimer[edge(w, t)] = Fraction(1)
    rec.added_vertices += [(w, GADGET), (t, GADGET)]
    rec.added_edges += [((min(u, w), max(u, w)), GADGET), ((min(v, w), max(v, w)), GADGET), ((w, t), GADGET)]
    return PlanarGraph(monomer, dimer, rot, (w, u)), rec


def to_enclosed(g: PlanarGraph, pad_weight=1) -> tuple[EnclosedGraph, AugmentationRecord]:
    """Pad, connect, shadow the boundary and fix its parity, then certify."""
    g1, rec = pad_to_even(g, pad_weight)
    g2, r2 = connect_components(g1)
    g3, r3 = build_boundary_circuit(g2)
    rec.extend(r2).extend(r3)
    if len(g3.vertices) and len(_outer_sequence(g3)) % 2:
        g3, r4 = evenize_boundary(g3)
        rec.extend(r4)
    return EnclosedGraph.certify(g3), rec
