from fractions import Fraction

import pytest
from hypothesis import given, strategies as st
from mpmath import mp

from fracpoly.errors import DomainError
from fracpoly.scalars import (
    DEFAULT_PRECISION,
    Scalar,
    as_scalar,
    decimal_str,
    mpf_to_fraction,
    parse_decimal_str,
    working_precision,
)

fracs = st.fractions(min_value=-100, max_value=100, max_denominator=1000)


def test_exact_construction_normalized():
    s = as_scalar(Fraction(6, -4))
    assert s.is_exact
    assert s.value == Fraction(-3, 2)
    assert s.value.denominator == 2  # gcd reduced, denominator positive


def test_float_input_is_exact_dyadic():
    s = as_scalar(0.5)
    assert s.is_exact and s.value == Fraction(1, 2)
    s = as_scalar(0.3)
    assert s.is_exact and s.value == Fraction(0.3)  # the dyadic, not 3/10


def test_string_input():
    assert as_scalar("3/7").value == Fraction(3, 7)
    assert as_scalar("0.3").value == Fraction(3, 10)


def test_exact_arithmetic_stays_exact():
    a = as_scalar(Fraction(1, 3))
    b = as_scalar(Fraction(1, 6))
    assert (a + b).is_exact and (a + b).value == Fraction(1, 2)
    assert (a * b).value == Fraction(1, 18)
    assert (a / b).value == 2
    assert (a - b).value == Fraction(1, 6)
    assert (a ** 3).value == Fraction(1, 27)


def test_mixed_promotes_to_max_precision():
    a = Scalar.big(1, 96)
    b = Scalar.big(2, 192)
    c = as_scalar(Fraction(1, 3))
    assert (a + b).precision == 192
    assert (a + c).precision == 96
    assert (c * c).is_exact


def test_big_requires_min_precision():
    with pytest.raises(DomainError):
        Scalar.big(1, 32)


def test_comparisons_cross_domain_exact():
    assert Scalar.big(0.5, 128) == as_scalar(Fraction(1, 2))
    assert as_scalar(Fraction(1, 3)) < Scalar.big(0.5, 128)
    # 1/3 is not dyadic, so the float of it differs from the exact value
    assert Scalar.big(Fraction(1, 3), 128) != as_scalar(Fraction(1, 3))


def test_int_conversion():
    assert int(as_scalar(4)) == 4
    with pytest.raises(ValueError):
        int(as_scalar(Fraction(1, 2)))


@given(fracs)
def test_mpf_fraction_roundtrip(q):
    s = Scalar.big(q, 128)
    back = mpf_to_fraction(s.value)
    # the stored float is some dyadic close to q; converting back is exact
    assert Scalar.big(back, 128).value == s.value


@given(fracs, fracs)
def test_exact_field_ops(a, b):
    sa, sb = as_scalar(a), as_scalar(b)
    assert (sa + sb).value == a + b
    assert (sa * sb).value == a * b
    if b != 0:
        assert (sa / sb).value == Fraction(a, 1) / b


def test_decimal_str_roundtrips():
    for prec in (64, 128, 192):
        for val in ("2.718281828459045235360287471352662497757",
                    "-0.0001220703125", "1048576", "0.1"):
            with working_precision(prec):
                s = Scalar.big(mp.mpf(val), prec)
            text = decimal_str(s)
            assert parse_decimal_str(text, prec).value == s.value


def test_decimal_str_prefers_short():
    s = Scalar.big(24, 128)
    assert decimal_str(s) == "24.0"


def test_str_rational_format():
    assert str(as_scalar(Fraction(-3, 7))) == "-3/7"
    assert str(as_scalar(5)) == "5"
