"""Published reference matrices and polynomials, replayed by the test-suite and CLI.

Matrices are kept as text, one line per row of the strict upper triangle
(entries j > i, comma separated), exactly as printed.  Entries are affine
in ``x`` (the monomer-pair fugacity) or ``z``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .pfaffian import SkewMatrix
from .poly import SparsePoly, univariate

_TERM = re.compile(r"[+-]?[^+-]+")


def parse_entry(text: str, var: str = "x") -> SparsePoly:
    """``"1-x"``, ``"-z^2"``, ``"1+z^2"`` and friends."""
    out = SparsePoly()
    for tok in _TERM.findall(text.replace(" ", "")):
        sign = -1 if tok.startswith("-") else 1
        body = tok.lstrip("+-")
        if var in body:
            coeff, _, power = body.partition(var)
            coeff = coeff.rstrip("*") or "1"
            exp = int(power.lstrip("^")) if power else 1
            out = out + SparsePoly.var(var, exp, sign * Fraction(coeff))
        else:
            out = out + sign * Fraction(body)
    return out


def parse_upper(text: str, var: str = "x") -> SkewMatrix:
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    upper = [[parse_entry(e, var) for e in ln.split(",")] for ln in lines]
    return SkewMatrix.from_upper(upper, zero=SparsePoly())


def parse_full(text: str, var: str = "z") -> SkewMatrix:
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    return SkewMatrix([[parse_entry(e, var) for e in ln.split(",")] for ln in lines])


@dataclass(frozen=True)
class MatrixFixture:
    name: str
    description: str
    matrix: SkewMatrix
    expected: SparsePoly
    var: str
    scale: Fraction = Fraction(1)  # the reference value is scale * pf(matrix)


@dataclass(frozen=True)
class PolyFixture:
    name: str
    description: str
    expected: SparsePoly


_STRIP_8 = """
1+x,-x,x,-x,x,-x,1+x
1+x,-x,x,-x,1+x,-x
1+x,1-x,x,1-x,x
1+x,-x,x,-x
1+x,-x,x
1+x,-x
1+x
"""

_L_SHAPE = """
1+x,-x,x,-x,x,-x,1+x
1+x,-x,1+x,-x,x,-x
1+x,-x,x,-x,x
1+x,-x,x,-x
1+x,-x,1+x
1+x,-x
1+x
"""

_SQUARE_16 = """
1+x,-x,x,-x,x,-x,x,-x,x,-x,1+x,0,0,0,0
1+x,-x,x,-x,x,-x,x,-x,x,-x,1,0,0,0
1+x,-x,x,-x,x,-x,x,-x,x,0,0,1,0
1+x,-x,x,-x,x,-x,x,-x,0,0,0,0
1+x,-x,x,-x,x,-x,x,0,0,1,0
1+x,-x,x,-x,x,-x,0,0,0,-1
1+x,-x,x,-x,x,0,0,0,0
1+x,-x,x,-x,0,0,0,-1
1+x,-x,x,0,-1,0,0
1+x,-x,0,0,0,0
1+x,0,-1,0,0
-1,0,0,0
1,-1,0
0,1
1
"""

_ENCLOSED_16 = """
1+x,-x,x,-x,x,-x,1+x,0,0,0,0,1,0,0,-1
1+x,-x,x,-x,x,-x,0,0,0,0,0,0,0,0
1+x,-x,x,-x,x,0,0,0,0,0,0,-1,0
1+x,1-x,x,-1-x,0,1,0,1,0,-1,0,0
1+x,-x,x,0,0,0,0,0,0,0,0
1+x,-x,1,0,0,0,0,0,0,0
1+x,1,0,-1,0,0,0,0,0
0,-1,-1,0,-1,0,0,0
0,1,1,0,0,0,0
0,0,0,0,0,0
1,0,0,0,0
0,0,0,0
1,0,0
1,-1
0
"""

_NO_CIRCUIT_16 = """
1+x,-x,x,-x,x,-x,x,-x,x,-x,x,-1-x,1,0,0
1+x,-x,x,-x,x,-x,x,-x,x,-x,1+x,1,0,0
1+x,-x,x,-x,1+x,-x,x,1-x,1+x,-x,0,1,0
1+x,1-x,1+x,-x,x,-x,x,-x,x,0,0,0
x,-x,x,-x,x,-x,x,-x,0,0,0
x,-x,x,-x,x,-x,x,0,0,0
x,-x,x,-x,x,-x,0,0,0
1+x,-x,x,-x,x,0,0,0
1+x,-x,x,-x,0,1,0
1+x,-x,x,0,1,0
1+x,-x,0,0,-1
x,0,0,0
1,0,0
0,0
1
"""

_SQUARE_RING = """
0,1,0,1,z,0,0,-z
-1,0,1,0,-z,-z,0,0
0,-1,0,1,0,z,z,0
-1,0,-1,0,0,0,-z,-z
-z,z,0,0,0,1,0,1
0,z,-z,0,-1,0,1,0
0,0,-z,z,0,-1,0,1
z,0,0,z,-1,0,-1,0
"""

_SQUARE_4 = """
0,1+z^2,-z^2,1+z^2
-1-z^2,0,1+z^2,-z^2
z^2,-1-z^2,0,1+z^2
-1-z^2,z^2,-1-z^2,0
"""

SQUARE_Z = univariate({4: 1, 2: 4, 0: 2}, "z")

MATRIX_FIXTURES: tuple[MatrixFixture, ...] = (
    MatrixFixture("strip", "2x4 strip, 8x8 A(x)", parse_upper(_STRIP_8),
                  univariate({4: 1, 3: 11, 2: 33, 1: 28, 0: 3}), "x"),
    MatrixFixture("l-shape", "L-shaped graph, 8x8 A(x)", parse_upper(_L_SHAPE),
                  univariate({4: 1, 3: 10, 2: 28, 1: 24, 0: 4}), "x"),
    MatrixFixture("square-grid", "4x4 square grid, 16x16 A(x)", parse_upper(_SQUARE_16),
                  univariate({6: 2, 5: 40, 4: 256, 3: 680, 2: 776, 1: 336, 0: 36}), "x"),
    MatrixFixture("enclosed", "enclosed graph with interior vertices, 16x16 A(x)", parse_upper(_ENCLOSED_16),
                  univariate({2: 22, 1: 40, 0: 4}), "x"),
    MatrixFixture("no-circuit", "graph without a boundary circuit, 16x16 A(x)", parse_upper(_NO_CIRCUIT_16),
                  univariate({6: 3, 5: 47, 4: 222, 3: 389, 2: 234, 1: 27}), "x"),
    MatrixFixture("square-ring", "4-cycle ring graph, 8x8 Kasteleyn matrix", parse_full(_SQUARE_RING, "z"),
                  SQUARE_Z, "z", Fraction(1, 2)),
    MatrixFixture("square", "4-cycle, 4x4 A(z)", parse_full(_SQUARE_4, "z"), SQUARE_Z, "z"),
)

RECT_4x3 = PolyFixture(
    "rect-4x3", "full partition function of the 4x3 grid",
    univariate({6: 1, 5: 17, 4: 102, 3: 267, 2: 302, 1: 123, 0: 11}),
)

RECT_6x6 = PolyFixture(
    "rect-6x6", "full partition function of the 6x6 grid",
    univariate({
        18: 1, 17: 60, 16: 1622, 15: 26172, 14: 281514, 13: 2135356, 12: 11785382,
        11: 48145820, 10: 146702793, 9: 333518324, 8: 562203148, 7: 693650988,
        6: 613605045, 5: 377446076, 4: 154396898, 3: 39277112, 2: 5580152,
        1: 363536, 0: 6728,
    }),
)
