from __future__ import annotations

from fractions import Fraction

import pytest

from dimerpf.errors import OddDimension, OddSubsetSize, SingularMatrix, TooLarge
from dimerpf.pfaffian import (
    SkewMatrix,
    determinant,
    interpolate,
    lieb_matrix,
    pf_combinatorial,
    pf_elimination,
    pf_univariate,
    skew_inverse,
    sub_pfaffian,
    verify_lieb_identity,
)
from dimerpf.poly import SparsePoly, univariate


def test_two_by_two():
    assert pf_elimination(SkewMatrix.from_upper([[5]])) == 5
    assert pf_combinatorial(SkewMatrix.from_upper([[5]])) == 5


def test_four_by_four_formula():
    a, b, c, d, e, f = 2, 3, 5, 7, 11, 13
    A = SkewMatrix.from_upper([[a, b, c], [d, e], [f]])
    assert pf_elimination(A) == a * f - b * e + c * d
    assert pf_combinatorial(A) == a * f - b * e + c * d


def test_empty_matrix_has_pfaffian_one():
    assert pf_elimination(SkewMatrix([])) == 1


def test_odd_dimension_rejected():
    A = SkewMatrix([[0, 1, 2], [-1, 0, 3], [-2, -3, 0]])
    with pytest.raises(OddDimension):
        pf_elimination(A)
    with pytest.raises(OddDimension):
        pf_combinatorial(A)


def test_non_skew_rejected():
    with pytest.raises(ValueError):
        SkewMatrix([[0, 1], [1, 0]])


def test_rational_entries_stay_exact():
    A = SkewMatrix.from_upper([[Fraction(1, 3), 0, 1], [1, 0], [Fraction(2, 7)]])
    assert pf_elimination(A) == Fraction(1, 3) * Fraction(2, 7) + 1
    assert pf_elimination(A) == pf_combinatorial(A)


def test_combinatorial_cap():
    with pytest.raises(TooLarge):
        pf_combinatorial(SkewMatrix.from_upper([[1] * (13 - i) for i in range(13)]))


def test_determinant():
    assert determinant([[2, 1], [7, 4]]) == 1
    assert determinant([[0, 1, 0], [0, 0, 1], [1, 0, 0]]) == 1


def test_interpolate_recovers_polynomial():
    xs = [0, 1, -1, 2]
    ys = [x**3 - 2 * x + 5 for x in xs]
    assert interpolate(xs, ys) == [5, -2, 0, 1]


def test_univariate_matches_combinatorial():
    x = SparsePoly.var("x")
    A = SkewMatrix.from_upper([[1 + x, -x, x], [1 + x, -x], [1 + x]], zero=SparsePoly())
    expected = pf_combinatorial(A)
    assert pf_univariate(A, "x") == expected
    assert expected == univariate({2: 1, 1: 3, 0: 1})


def test_sub_pfaffian():
    A = SkewMatrix.from_upper([[2, 3, 5], [7, 11], [13]])
    assert sub_pfaffian(A, [0, 1]) == 13
    assert sub_pfaffian(A, [0, 1, 2, 3]) == 1
    with pytest.raises(OddSubsetSize):
        sub_pfaffian(A, [0])


def test_skew_inverse():
    A = SkewMatrix.from_upper([[2, 3, 5], [7, 11], [13]])
    inv = skew_inverse(A)
    for i in range(4):
        for j in range(4):
            assert sum(A.rows[i][k] * inv[k][j] for k in range(4)) == (i == j)
    with pytest.raises(SingularMatrix):
        skew_inverse(SkewMatrix.from_upper([[0, 0, 0], [0, 0], [0]]))


def test_lieb_matrix_and_identity():
    a = SkewMatrix.from_upper([[1, 0, 1], [1, 0], [1]])
    ell = [1, 2, 0, 3]
    A = lieb_matrix(a, ell)
    assert A.rows[0][1] == 1 + 1 * 2
    assert A.rows[0][2] == 0 - 1 * 0
    assert verify_lieb_identity(a, ell)


def test_row_swap_negates():
    A = SkewMatrix.from_upper([[2, 3, 5], [7, 11], [13]])
    assert pf_elimination(A.swap(0, 2)) == -pf_elimination(A)
