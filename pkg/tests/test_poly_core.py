from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from meixner_sobolev.poly_core import (
    Polynomial,
    format_rational,
    forward_difference,
    is_canonical,
    parse_rational,
    pochhammer,
    poly_eval,
    poly_eval_real,
    stirling2,
    stirling_convert,
)

X = Polynomial.x()
fractions = st.fractions(min_value=-100, max_value=100, max_denominator=50)
polys = st.lists(fractions, max_size=6).map(Polynomial)


def test_pochhammer_examples():
    assert pochhammer(Fraction(7, 3), 0) == 1
    assert isinstance(pochhammer(Fraction(7, 3), 0), Fraction)
    assert pochhammer(2, 3) == 24
    assert pochhammer(-3, 5) == 0


def test_forward_difference_examples():
    assert forward_difference(Polynomial.constant(Fraction(5))).is_zero()
    assert forward_difference(X * X) == 2 * X + 1
    assert forward_difference(X**3) == 3 * X * X + 3 * X + 1


def test_eval_examples():
    assert poly_eval(X * X - 1, Fraction(2)) == 3
    assert poly_eval(Polynomial(), Fraction(9, 4)) == 0
    assert poly_eval(X**3, Fraction(1, 2)) == Fraction(1, 8)
    assert poly_eval_real(X * X - 1, 0.5) == -0.75


def test_stirling_convert_examples():
    m1, m2 = Fraction(2), Fraction(6)
    assert stirling_convert([1]) == [1]
    assert stirling_convert([1, m1]) == [1, m1]
    assert stirling_convert([1, m1, m2]) == [1, m1, m2 + m1]
    assert [stirling2(4, k) for k in range(5)] == [0, 1, 7, 6, 1]


def test_trailing_zeros_trimmed():
    p = Polynomial([Fraction(1), Fraction(0), Fraction(0)])
    assert p.coeffs == (1,)
    assert p.degree == 0
    assert Polynomial().degree == -1


def test_parse_rational_is_strict():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational("-7") == -7
    assert parse_rational(" 6/8 ") == Fraction(3, 4)
    for bad in ("0.5", "1e3", "a/b", "", "1//2", "nan"):
        with pytest.raises(ValueError):
            parse_rational(bad)


def test_format_rational():
    assert format_rational(Fraction(13, 5)) == "13/5"
    assert format_rational(Fraction(-4, 2)) == "-2"


@given(polys, polys, fractions)
def test_difference_is_linear(p, q, s):
    assert forward_difference(p + q * s) == forward_difference(p) + forward_difference(q) * s


@given(st.lists(fractions, min_size=1, max_size=5), fractions.filter(lambda v: v != 0))
def test_difference_lowers_degree(low, lead):
    p = Polynomial(low + [lead])
    d = forward_difference(p)
    assert d.degree == p.degree - 1
    assert d.lc == p.degree * p.lc


@given(polys, fractions)
def test_difference_matches_pointwise(p, x):
    assert forward_difference(p)(x) == p(x + 1) - p(x)


@given(fractions, st.integers(0, 8), st.integers(0, 8))
def test_pochhammer_splits(a, m, n):
    assert pochhammer(a, m + n) == pochhammer(a, m) * pochhammer(a + m, n)


@given(polys, polys)
def test_canonical_coefficients(p, q):
    for v in (p * q).coeffs:
        assert is_canonical(v)
        assert gcd(v.numerator, v.denominator) == 1 and v.denominator > 0


@given(polys, polys, fractions)
def test_ring_operations_evaluate_pointwise(p, q, x):
    assert (p * q)(x) == p(x) * q(x)
    assert (p - q)(x) == p(x) - q(x)
    assert p.shift(Fraction(1))(x) == p(x + 1)
