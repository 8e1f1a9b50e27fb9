"""Deterministic families of small planar test graphs."""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Iterator

import networkx as nx
from scipy.spatial import Delaunay

from .embedding import PlanarGraph


def grid(rows: int, cols: int) -> PlanarGraph:
    """``rows`` x ``cols`` vertices; vertex ``i*cols + j`` sits at (j, i)."""
    pts = {i * cols + j: (j, i) for i in range(rows) for j in range(cols)}
    edges = [(i * cols + j, i * cols + j + 1) for i in range(rows) for j in range(cols - 1)]
    edges += [(i * cols + j, (i + 1) * cols + j) for i in range(rows - 1) for j in range(cols)]
    return PlanarGraph.from_coordinates(pts, edges)


def _circle_point(k: int, n: int, radius: int = 1000) -> tuple[Fraction, Fraction]:
    t = 2 * math.pi * k / n
    return Fraction(round(radius * math.cos(t))), Fraction(round(radius * math.sin(t)))


def cycle(n: int) -> PlanarGraph:
    pts = {k: _circle_point(k, n) for k in range(n)}
    return PlanarGraph.from_coordinates(pts, [(k, (k + 1) % n) for k in range(n)])


def wheel(spokes: int) -> PlanarGraph:
    """Hub 0 inside a rim 1..spokes."""
    pts = {0: (0, 0)}
    pts.update({k + 1: _circle_point(k, spokes) for k in range(spokes)})
    edges = [(0, k) for k in range(1, spokes + 1)]
    edges += [(k, k % spokes + 1) for k in range(1, spokes + 1)]
    return PlanarGraph.from_coordinates(pts, edges)


def from_networkx(G: nx.Graph) -> PlanarGraph:
    """Straight-line drawing from networkx's planar layout, ids relabeled 0..n-1."""
    G = nx.convert_node_labels_to_integers(G, ordering="sorted")
    pos = nx.planar_layout(G, scale=1000)
    pts = {v: (Fraction(round(float(p[0]))), Fraction(round(float(p[1])))) for v, p in pos.items()}
    return PlanarGraph.from_coordinates(pts, list(G.edges()))


def random_tree(n: int, seed: int) -> PlanarGraph:
    rng = random.Random(seed)
    G = nx.Graph()
    G.add_node(0)
    for v in range(1, n):
        G.add_edge(v, rng.randrange(v))
    return from_networkx(G)


def delaunay(n: int, seed: int, drop: float = 0.0) -> PlanarGraph:
    """Delaunay triangulation of ``n`` random integer points, optionally thinned."""
    rng = random.Random(seed)
    pts: set[tuple[int, int]] = set()
    while len(pts) < n:
        pts.add((rng.randrange(1000), rng.randrange(1000)))
    coords = sorted(pts)
    tri = Delaunay(coords)
    edges = set()
    for simplex in tri.simplices:
        a, b, c = (int(x) for x in simplex)
        for u, v in ((a, b), (b, c), (a, c)):
            edges.add((min(u, v), max(u, v)))
    edges = sorted(edges)
    if drop:
        edges = [e for e in edges if rng.random() >= drop]
    return PlanarGraph.from_coordinates(dict(enumerate(coords)), edges)


def atlas_planar(max_vertices: int = 7, connected: bool = True) -> Iterator[tuple[str, PlanarGraph]]:
    """Every planar graph of the networkx atlas with 1..max_vertices vertices."""
    for idx, G in enumerate(nx.graph_atlas_g()):
        n = G.number_of_nodes()
        if n == 0 or n > max_vertices:
            continue
        if connected and not nx.is_connected(G):
            continue
        if not nx.check_planarity(G)[0]:
            continue
        yield f"atlas{idx}", from_networkx(G)


def random_planar(n: int, seed: int, connected: bool = True) -> PlanarGraph:
    """Thinned Delaunay graph on ``n`` points, retried until connected if requested."""
    k = 0
    while True:
        g = delaunay(n, seed * 1000 + k, drop=0.35)
        if not connected or g.is_connected():
            return g
        k += 1


def standard_corpus(atlas_max: int = 7, eight_vertex: int = 40, delaunay_count: int = 25) -> list[tuple[str, PlanarGraph]]:
    """The fixed corpus used by the equivalence sweep."""
    out = list(atlas_planar(atlas_max))
    out += [(f"planar8_{s}", random_planar(8, s)) for s in range(eight_vertex)]
    out += [(f"grid{r}x{c}", grid(r, c)) for r in range(1, 4) for c in range(r, 5) if r * c >= 2]
    out += [(f"wheel{k}", wheel(k)) for k in range(3, 9)]
    out += [(f"tree{n}_{s}", random_tree(n, s)) for n in range(2, 11) for s in range(2)]
    out += [(f"delaunay{s}", delaunay(6 + s % 7, 100 + s)) for s in range(delaunay_count)]
    return out


def weight_patterns(g: PlanarGraph, seed: int = 0) -> list[tuple[str, PlanarGraph]]:
    """All-ones, one zero edge, and a seeded mix of 1 and 1/2 weights."""
    rng = random.Random(seed)
    out = [("all-1", g)]
    if g.dimer:
        e = sorted(g.dimer, key=sorted)[0]
        out.append(("one-edge-0", g.with_weights(dimer={e: 0})))
    half = Fraction(1, 2)
    mixed = g.with_weights(
        monomer={v: rng.choice([1, half]) for v in g.vertices},
        dimer={e: rng.choice([1, half]) for e in g.dimer},
    )
    out.append(("mixed", mixed))
    return out
