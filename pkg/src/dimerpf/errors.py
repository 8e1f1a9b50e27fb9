"""Exception hierarchy shared by every module.

The CLI reports ``type(exc).__name__`` in its JSON error objects, so the
class names double as stable error codes.
"""

from __future__ import annotations


class DimerError(Exception):
    """Base class for all library errors."""


# embedding
class InvalidGraph(DimerError):
    pass


class CrossingEdges(InvalidGraph):
    pass


class DuplicateEdge(InvalidGraph):
    pass


class SelfLoop(InvalidGraph):
    pass


class NotACircuit(DimerError):
    pass


class NotMergeable(DimerError):
    pass


class TooLarge(DimerError):
    pass


class UndirectedEdgeInCircuit(DimerError):
    pass


# reduce
class NotConnected(DimerError):
    pass


class BoundaryAlreadyEven(DimerError):
    pass


class NotEnclosed(DimerError):
    pass


# kasteleyn
class BadPartialOrientation(DimerError):
    pass


class NoCoveringExists(DimerError):
    pass


class InvalidCovering(DimerError):
    pass


class MonomerOffBoundary(DimerError):
    pass


class OddMonomerCount(DimerError):
    pass


class NotPerfectMatching(DimerError):
    pass


# pfaffian
class OddDimension(DimerError):
    pass


class OddSubsetSize(DimerError):
    pass


class SingularMatrix(DimerError):
    pass


# partition
class NonzeroInteriorMonomer(DimerError):
    pass


class NoPerfectMatching(DimerError):
    pass


class IndexOffBoundary(DimerError):
    pass


class NegativeDimerWeight(DimerError):
    pass


# fullmd
class BadDimensions(DimerError):
    pass


class InvalidSkeleton(DimerError):
    pass


class NotHamiltonian(DimerError):
    pass


class NonpositiveMonomerWeight(DimerError):
    pass


class NonSquareWeight(DimerError):
    pass
