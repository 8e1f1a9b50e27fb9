from __future__ import annotations

from fractions import Fraction

import pytest

from dimerpf.poly import SparsePoly, to_fraction, univariate


def test_to_fraction_parses_strings_and_rejects_floats():
    assert to_fraction("3/2") == Fraction(3, 2)
    assert to_fraction(4) == 4
    with pytest.raises(TypeError):
        to_fraction(0.5)
    with pytest.raises(TypeError):
        to_fraction(True)


def test_arithmetic_and_equality():
    x = SparsePoly.var("x")
    p = (x + 1) * (x - 1)
    assert p == x**2 - 1
    assert p.univariate("x") == {2: 1, 0: -1}
    assert (p - p) == 0
    assert SparsePoly.constant(3) == 3


def test_multivariate_product_is_commutative():
    a = SparsePoly.var("a")
    b = SparsePoly.var("b", 2, 3)
    assert a * b == b * a
    assert (a * b).coeff({"a": 1, "b": 2}) == 3


def test_half_integer_and_negative_exponents():
    r = SparsePoly.var("z", Fraction(1, 2))
    assert r * r == SparsePoly.var("z")
    inv = SparsePoly.var("z", -1)
    assert inv * SparsePoly.var("z") == 1
    with pytest.raises(ValueError):
        SparsePoly.var("z", Fraction(1, 3))


def test_caps_truncate_products():
    caps = {"x": 1}
    x = SparsePoly.var("x", caps=caps)
    assert x * x == 0
    assert (x + 1) * (x + 1) == 2 * SparsePoly.var("x") + 1


def test_evaluate_and_substitute():
    x, y = SparsePoly.var("x"), SparsePoly.var("y")
    p = x * y + 3
    assert p.evaluate({"x": 2, "y": Fraction(1, 2)}) == 4
    assert p.substitute({"y": x}) == x**2 + 3


def test_json_round_trip_for_univariate_polys():
    p = univariate({4: 1, 2: 4, 0: 2}, "z")
    data = p.to_json("z")
    assert data == {"4": "1", "2": "4", "0": "2"}
    assert list(data) == ["4", "2", "0"]
    assert SparsePoly.from_json(data, "z") == p
    half = univariate({Fraction(3, 2): Fraction(-1, 3)}, "x")
    assert half.to_json("x") == {"3/2": "-1/3"}


def test_multivariate_json_keys():
    p = SparsePoly.var("lam1", 2) * SparsePoly.var("del0_1") + 1
    assert p.to_json() == {"del0_1*lam1^2": "1", "1": "1"}
