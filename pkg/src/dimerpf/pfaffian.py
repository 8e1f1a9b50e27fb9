"""Exact Pfaffians of skew-symmetric matrices.

Three algorithms with overlapping domains:

* :func:`pf_combinatorial` -- signed perfect-pairing sum, works over any
  commutative ring (used for multivariate polynomial entries);
* :func:`pf_elimination` -- fraction-free skew elimination over the
  rationals;
* :func:`pf_univariate` -- evaluation at integer nodes plus exact
  interpolation, for matrices whose entries are polynomials in one variable.

Matrix indices are 0-based throughout.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import lcm
from typing import Callable, Iterable, Sequence

from .errors import OddDimension, OddSubsetSize, SingularMatrix, TooLarge
from .poly import Scalar, SparsePoly, to_fraction


class SkewMatrix:
    """Antisymmetric square matrix over an exact ring (ints, Fractions or SparsePoly)."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence], check: bool = True):
        self.rows = [list(r) for r in rows]
        n = len(self.rows)
        if check:
            for i, r in enumerate(self.rows):
                if len(r) != n:
                    raise ValueError("matrix is not square")
                if r[i] != 0:
                    raise ValueError(f"nonzero diagonal entry at {i}")
                for j in range(i + 1, n):
                    if r[j] != -self.rows[j][i]:
                        raise ValueError(f"entries ({i},{j}) and ({j},{i}) are not opposite")

    @classmethod
    def from_upper(cls, upper: Sequence[Sequence], zero=0) -> "SkewMatrix":
        """Build from the strict upper triangle; ``upper[i]`` lists entries j = i+1..n-1."""
        n = len(upper[0]) + 1 if upper else 0
        rows = [[zero] * n for _ in range(n)]
        for i, line in enumerate(upper):
            if len(line) != n - 1 - i:  # trailing empty rows may be omitted
                raise ValueError(f"row {i} has {len(line)} upper entries, expected {n - 1 - i}")
            for k, v in enumerate(line):
                j = i + 1 + k
                rows[i][j] = v
                rows[j][i] = -v
        return cls(rows, check=False)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, SkewMatrix) and self.rows == other.rows

    def __repr__(self) -> str:
        return f"SkewMatrix({self.rows!r})"

    def keep(self, indices: Iterable[int]) -> "SkewMatrix":
        idx = sorted(indices)
        return SkewMatrix([[self.rows[i][j] for j in idx] for i in idx], check=False)

    def delete(self, indices: Iterable[int]) -> "SkewMatrix":
        gone = set(indices)
        return self.keep(i for i in range(self.n) if i not in gone)

    def map(self, fn: Callable) -> "SkewMatrix":
        return SkewMatrix([[fn(v) for v in r] for r in self.rows], check=False)

    def swap(self, i: int, j: int) -> "SkewMatrix":
        perm = list(range(self.n))
        perm[i], perm[j] = perm[j], perm[i]
        return SkewMatrix([[self.rows[a][b] for b in perm] for a in perm], check=False)

    def upper(self) -> list[list]:
        return [self.rows[i][i + 1:] for i in range(self.n)]


def _as_matrix(A) -> SkewMatrix:
    return A if isinstance(A, SkewMatrix) else SkewMatrix(A)


def pf_combinatorial(A, max_dim: int = 12):
    """Pfaffian as the signed sum over perfect pairings.

    The sum is organised as the expansion along the smallest remaining index,
    memoised on the set of remaining indices, so every pairing is visited
    through shared sub-sums.  Entries may live in any commutative ring that
    supports ``+``, ``-`` and ``*`` with ints.
    """
    A = _as_matrix(A)
    n = A.n
    if n % 2:
        raise OddDimension(f"dimension {n} is odd")
    if n > max_dim:
        raise TooLarge(f"pf_combinatorial is capped at dimension {max_dim}, got {n}")
    if n == 0:
        return 1
    rows = A.rows
    memo: dict[tuple[int, ...], object] = {}

    def rec(rem: tuple[int, ...]):
        if not rem:
            return 1
        hit = memo.get(rem)
        if hit is not None:
            return hit
        i = rem[0]
        total = 0
        for pos in range(1, len(rem)):
            j = rem[pos]
            a = rows[i][j]
            if a == 0:
                continue
            sub = rec(rem[1:pos] + rem[pos + 1:])
            if sub == 0:
                continue
            term = a * sub
            total = total + term if pos % 2 else total - term
        memo[rem] = total
        return total

    return rec(tuple(range(n)))


def _integer_scaled(A: SkewMatrix) -> tuple[list[list[int]], int]:
    fr = [[to_fraction(v) for v in r] for r in A.rows]
    den = reduce(lcm, (v.denominator for r in fr for v in r), 1)
    return [[int(v * den) for v in r] for r in fr], den


def pf_elimination(A) -> Fraction:
    """Pfaffian over the rationals by fraction-free skew elimination.

    After ``k`` pivot pairs the working entry ``(i, j)`` holds the Pfaffian
    of the principal minor on the first ``2k`` indices plus ``{i, j}``;
    each update is an exact integer division by the previous pivot.  Index
    swaps (applied to rows and columns together) flip the sign.
    """
    A = _as_matrix(A)
    n = A.n
    if n % 2:
        raise OddDimension(f"dimension {n} is odd")
    if n == 0:
        return Fraction(1)
    M, den = _integer_scaled(A)
    return Fraction(_pf_integer(M), den ** (n // 2))


def _pf_integer(M: list[list[int]]) -> int:
    """Pfaffian of an even integer skew matrix; ``M`` is overwritten."""
    n = len(M)
    sign = 1
    prev = 1
    for k in range(0, n, 2):
        rk = M[k]
        piv_col = next((j for j in range(k + 1, n) if rk[j] != 0), None)
        if piv_col is None:
            return 0
        if piv_col != k + 1:
            _swap_index(M, k + 1, piv_col)
            sign = -sign
        piv = rk[k + 1]
        rk1 = M[k + 1]
        for i in range(k + 2, n):
            ri = M[i]
            aki = rk[i]
            ak1i = rk1[i]
            for j in range(i + 1, n):
                v = (piv * ri[j] - aki * rk1[j] + rk[j] * ak1i) // prev
                ri[j] = v
                M[j][i] = -v
        prev = piv
    return sign * prev


def _swap_index(M: list[list[int]], a: int, b: int) -> None:
    M[a], M[b] = M[b], M[a]
    for r in M:
        r[a], r[b] = r[b], r[a]


def determinant(rows: Sequence[Sequence]) -> Fraction:
    """Exact determinant by Bareiss elimination (independent of the Pfaffian code)."""
    fr = [[to_fraction(v) for v in r] for r in rows]
    n = len(fr)
    if n == 0:
        return Fraction(1)
    den = reduce(lcm, (v.denominator for r in fr for v in r), 1)
    M = [[int(v * den) for v in r] for r in fr]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return Fraction(sign * M[n - 1][n - 1], den ** n)


def interpolation_nodes(count: int) -> list[int]:
    """0, 1, -1, 2, -2, ... (``count`` of them)."""
    nodes = [0]
    k = 1
    while len(nodes) < count:
        nodes.append(k)
        if len(nodes) < count:
            nodes.append(-k)
        k += 1
    return nodes


def interpolate(xs: Sequence[Scalar], ys: Sequence[Scalar]) -> list[Fraction]:
    """Coefficients (lowest degree first) of the unique polynomial through the points."""
    xs = [Fraction(x) for x in xs]
    coef = [Fraction(y) for y in ys]
    m = len(xs)
    for j in range(1, m):
        for i in range(m - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    out = [Fraction(0)] * m
    for k in range(m - 1, -1, -1):
        # out = out * (t - xs[k]) + coef[k]
        shifted = [Fraction(0)] + out[:-1]
        out = [s - xs[k] * o for s, o in zip(shifted, out)]
        out[0] += coef[k]
    return out


def pf_univariate(A, var: str = "x", degree_bound: int | None = None, executor=None) -> SparsePoly:
    """Pfaffian of a matrix of univariate polynomials by evaluation/interpolation.

    ``degree_bound`` bounds the degree of every entry (computed when omitted);
    the Pfaffian has degree at most ``n * D / 2`` so that many plus one
    integer nodes determine it.  ``executor`` may be any object with a
    ``map`` method; results do not depend on evaluation order.
    """
    A = _as_matrix(A)
    n = A.n
    if n % 2:
        raise OddDimension(f"dimension {n} is odd")
    polys = [[SparsePoly.lift(v) for v in r] for r in A.rows]
    if degree_bound is None:
        degree_bound = 0
        for r in polys:
            for p in r:
                for e in p.univariate(var):
                    if Fraction(e).denominator != 1 or e < 0:
                        raise ValueError("pf_univariate needs non-negative integral exponents")
                    degree_bound = max(degree_bound, int(e))
    count = n * degree_bound // 2 + 1
    nodes = interpolation_nodes(count)
    # clear denominators once so every evaluation is pure integer work
    den = reduce(lcm, (c.denominator for r in polys for p in r for _, c in p.items()), 1)
    entries = []
    for i, r in enumerate(polys):
        for j in range(i + 1, n):
            tab = r[j].univariate(var)
            if tab:
                entries.append((i, j, [(int(e), int(c * den)) for e, c in tab.items()]))
    scale = den ** (n // 2)

    def value_at(t: int) -> Fraction:
        M = [[0] * n for _ in range(n)]
        for i, j, tab in entries:
            v = sum(c * t**e for e, c in tab)
            M[i][j] = v
            M[j][i] = -v
        return Fraction(_pf_integer(M), scale)

    values = list(executor.map(value_at, nodes)) if executor is not None else [value_at(t) for t in nodes]
    coeffs = interpolate(nodes, values)
    return SparsePoly.from_coeffs(var, {k: c for k, c in enumerate(coeffs) if c != 0})


def pfaffian(A, var: str = "x"):
    """Dispatch on entry type: rationals, univariate polys, or general polys."""
    A = _as_matrix(A)
    polys = [v for r in A.rows for v in r if isinstance(v, SparsePoly)]
    if not polys:
        return pf_elimination(A)
    names = set().union(*(p.variables() for p in polys))
    if names <= {var} and all(e >= 0 and Fraction(e).denominator == 1 for p in polys for e in p.univariate(var)):
        return pf_univariate(A, var)
    return pf_combinatorial(A, max_dim=max(12, A.n))


def sub_pfaffian(A, removed: Iterable[int], method: Callable | None = None):
    """Pfaffian of ``[A]_I``: rows/columns in ``removed`` deleted, order preserved.

    Removing every index yields 1 by convention.
    """
    A = _as_matrix(A)
    removed = set(removed)
    if len(removed) % 2:
        raise OddSubsetSize(f"|I| = {len(removed)} is odd")
    if not removed <= set(range(A.n)):
        raise IndexError("index set not contained in the matrix range")
    minor = A.delete(removed)
    if minor.n == 0:
        return Fraction(1)
    return (method or pfaffian)(minor)


def skew_inverse(A) -> list[list[Fraction]]:
    """Exact inverse of a rational skew matrix by Gauss-Jordan elimination."""
    A = _as_matrix(A)
    n = A.n
    M = [[to_fraction(v) for v in r] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(A.rows)]
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c] != 0), None)
        if p is None:
            raise SingularMatrix("matrix is singular")
        M[c], M[p] = M[p], M[c]
        inv = 1 / M[c][c]
        M[c] = [v * inv for v in M[c]]
        for r in range(n):
            if r != c and M[r][c] != 0:
                f = M[r][c]
                M[r] = [a - f * b for a, b in zip(M[r], M[c])]
    return [row[n:] for row in M]


def lieb_matrix(a, ell: Sequence) -> SkewMatrix:
    """``A_ij = a_ij - (-1)^(i+j) ell_i ell_j`` for i < j (1-based parity), antisymmetrised."""
    a = _as_matrix(a)
    n = a.n
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            # 0-based i+j has the same parity as 1-based (i+1)+(j+1)
            prod = ell[i] * ell[j]
            v = a.rows[i][j] - prod if (i + j) % 2 == 0 else a.rows[i][j] + prod
            rows[i][j] = v
            rows[j][i] = -v
    return SkewMatrix(rows, check=False)


def verify_lieb_identity(a, ell: Sequence) -> bool:
    """Check ``pf(A(ell)) = sum_I pf([a]_I) prod_{i in I} ell_i`` with both sides exact.

    The left side uses elimination on the assembled matrix; the right side
    sums combinatorial sub-Pfaffians over every even index subset.
    """
    from itertools import combinations

    a = _as_matrix(a)
    n = a.n
    if n % 2:
        raise OddDimension(f"dimension {n} is odd")
    ell = [to_fraction(v) for v in ell]
    lhs = pf_elimination(lieb_matrix(a, ell))
    rhs = Fraction(0)
    for k in range(0, n + 1, 2):
        for I in combinations(range(n), k):
            weight = Fraction(1)
            for i in I:
                weight *= ell[i]
            if weight == 0:
                continue
            minor = a.delete(I)
            rhs += weight * (pf_combinatorial(minor, max_dim=n) if minor.n else 1)
    return lhs == rhs
