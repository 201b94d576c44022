from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from focalsieve.numerics import arith, format_rational, parse_rational, rat

nonzero_ints = st.integers(min_value=-10**6, max_value=10**6).filter(lambda n: n != 0)
rationals = st.builds(rat, st.integers(min_value=-10**6, max_value=10**6), nonzero_ints)


def test_rat_normalizes():
    assert rat(2, 4) == Fraction(1, 2)
    assert rat(2, 4).numerator == 1
    assert rat(2, 4).denominator == 2


def test_rat_sign_carried_by_numerator():
    half = rat(3, -6)
    assert half.numerator == -1
    assert half.denominator == 2


def test_rat_already_reduced():
    assert rat(11, 5).numerator == 11
    assert rat(11, 5).denominator == 5


def test_rat_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        rat(1, 0)


def test_arith_examples():
    assert arith(rat(1, 2), rat(1, 2), "+") == 1
    assert arith(rat(11, 5), rat(5), "*") == 11
    assert arith(rat(1, 3), rat(1, 3), "/") == 1


def test_arith_unicode_operators():
    assert arith(rat(1), rat(2), "−") == -1
    assert arith(rat(3), rat(4), "×") == 12
    assert arith(rat(1), rat(4), "÷") == rat(1, 4)


def test_arith_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        arith(rat(1), rat(0), "/")


def test_arith_unknown_operator():
    with pytest.raises(ValueError):
        arith(rat(1), rat(1), "%")


def test_equality_is_representation_independent():
    assert rat(1, 2) == rat(2, 4)
    assert rat(-1, 2) == rat(3, -6)


@given(rationals, rationals, rationals)
def test_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a


@given(rationals)
def test_inverses(a):
    assert a + (-a) == 0
    if a != 0:
        assert a * (1 / a) == 1


@given(st.integers(min_value=-10**6, max_value=10**6), nonzero_ints, nonzero_ints)
def test_scaling_does_not_change_value(n, d, m):
    assert rat(n, d) == rat(n * m, d * m)


def test_format_rational():
    assert format_rational(rat(11, 5)) == "11/5"
    assert format_rational(rat(-1, 2)) == "-1/2"
    assert format_rational(rat(4, 2)) == "2"
    assert format_rational(7) == "7"


@given(rationals)
def test_format_parse_roundtrip(a):
    assert parse_rational(format_rational(a)) == a
