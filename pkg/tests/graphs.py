"""Small hand-built graphs shared by the tests."""

from __future__ import annotations

from dimerpf.corpus import grid
from dimerpf.embedding import PlanarGraph


def square() -> PlanarGraph:
    return grid(2, 2)


def square_diag() -> PlanarGraph:
    pts = {0: (0, 0), 1: (1, 0), 2: (1, 1), 3: (0, 1)}
    return PlanarGraph.from_coordinates(pts, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])


def k4_inner() -> PlanarGraph:
    """Triangle 0-1-2 with vertex 3 inside, joined to all three."""
    pts = {0: (0, 0), 1: (6, 0), 2: (3, 6), 3: (3, 2)}
    return PlanarGraph.from_coordinates(pts, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)])


def single_edge() -> PlanarGraph:
    return PlanarGraph.from_coordinates({0: (0, 0), 1: (1, 0)}, [(0, 1)])


def path(n: int) -> PlanarGraph:
    return PlanarGraph.from_coordinates({k: (k, 0) for k in range(n)}, [(k, k + 1) for k in range(n - 1)])


def star3() -> PlanarGraph:
    pts = {0: (0, 0), 1: (2, 0), 2: (-1, 2), 3: (-1, -2)}
    return PlanarGraph.from_coordinates(pts, [(0, 1), (0, 2), (0, 3)])


def nested_square() -> PlanarGraph:
    """A large square with a disconnected edge floating inside it."""
    pts = {0: (0, 0), 1: (10, 0), 2: (10, 10), 3: (0, 10), 4: (4, 5), 5: (6, 5)}
    return PlanarGraph.from_coordinates(pts, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5)])
