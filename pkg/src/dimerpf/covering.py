"""Monomer-dimer coverings."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InvalidCovering


@dataclass(frozen=True)
class Covering:
    monomers: frozenset
    dimers: frozenset  # of frozenset({u, v})

    @classmethod
    def of(cls, monomers: Iterable[int] = (), dimers: Iterable[Iterable[int]] = ()) -> "Covering":
        return cls(frozenset(monomers), frozenset(frozenset(d) for d in dimers))

    def covered(self) -> set[int]:
        out = set(self.monomers)
        for d in self.dimers:
            out |= d
        return out

    def validate(self, vertices: Iterable[int], edges) -> None:
        """Raise InvalidCovering unless this partitions ``vertices`` using ``edges``."""
        vertices = set(vertices)
        seen = set(self.monomers)
        if not seen <= vertices:
            raise InvalidCovering("monomer on an unknown vertex")
        for d in self.dimers:
            if len(d) != 2 or d not in edges:
                raise InvalidCovering(f"dimer {sorted(d)} is not an edge")
            if seen & d:
                raise InvalidCovering(f"dimer {sorted(d)} overlaps another object")
            seen |= d
        if seen != vertices:
            raise InvalidCovering("covering misses some vertices")

    def weight(self, g, monomer_weights: bool = True):
        """Product of dimer weights (and monomer weights unless disabled)."""
        w = 1
        for d in self.dimers:
            w *= g.dimer[d]
        if monomer_weights:
            for v in self.monomers:
                w *= g.monomer[v]
        return w
