from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from topoarith.errors import UnderflowError, UndefinedValuationError
from topoarith.numerals import (
    DigitString,
    Numeral,
    Sign,
    SignedNumeral,
    add,
    floordiv,
    metric2,
    mul,
    sub,
    suffix,
    trailing_digits,
    v2,
)

naturals = st.integers(min_value=0, max_value=1 << 80)


@pytest.mark.parametrize(
    "n, k, text",
    [(6, 5, "00110"), (0, 3, "000"), (13, 2, "01"), (5, 0, "")],
)
def test_suffix_examples(n, k, text):
    s = suffix(n, k)
    assert str(s) == text
    assert len(s) == k


def test_suffix_bits_are_least_significant_first():
    assert suffix(6, 5).bits == (0, 1, 1, 0, 0)
    assert suffix(13, 2).bits == (1, 0)


def test_suffix_rejects_negative_length():
    with pytest.raises(ValueError):
        suffix(3, -1)


@pytest.mark.parametrize("n, k", [(32, 5), (1, 0), (12, 2), (-12, 2)])
def test_v2(n, k):
    assert v2(n) == k


def test_v2_zero_is_undefined():
    with pytest.raises(UndefinedValuationError):
        v2(0)


def test_metric_examples():
    assert metric2(7, 7) == 0
    assert metric2(6, 38) == Fraction(1, 32)
    assert metric2(1, 2) == 1


@given(naturals, naturals, naturals)
def test_metric_is_an_ultrametric(x, y, z):
    assert metric2(x, y) == metric2(y, x)
    assert metric2(x, z) <= max(metric2(x, y), metric2(y, z))


@given(naturals, naturals, st.integers(min_value=0, max_value=90))
def test_ball_residue_suffix_agree(x, y, k):
    close = metric2(x, y) <= Fraction(1, 1 << k)
    assert close == (x % (1 << k) == y % (1 << k)) == (suffix(x, k) == suffix(y, k))


def test_arithmetic_examples():
    assert add(1261, 153) == 1414
    assert mul(1261, 153) == 192933
    assert sub(18, 1) == 17
    assert floordiv(31, 2) == 15


def test_natural_subtraction_underflows():
    with pytest.raises(UnderflowError):
        sub(Numeral(1), Numeral(18))


def test_signed_subtraction_is_total():
    assert sub(SignedNumeral(1), 18) == -17
    assert isinstance(sub(SignedNumeral(1), 18), SignedNumeral)


@pytest.mark.parametrize(
    "x, k, base, text",
    [(1414, 3, 10, "414"), (192933, 3, 10, "933"), (6, 5, 2, "00110"), (7, 0, 10, "")],
)
def test_trailing_digits(x, k, base, text):
    assert trailing_digits(x, k, base) == text


def test_trailing_digits_base_check():
    with pytest.raises(ValueError):
        trailing_digits(5, 2, 1)


@given(naturals)
def test_numeral_digits_round_trip(v):
    n = Numeral(v)
    assert Numeral.from_digits(n.digits) == v
    assert not n.digits or n.digits[-1] == 1


def test_zero_is_the_empty_digit_sequence():
    assert Numeral(0).digits == ()
    assert Numeral.from_digits((0, 0, 0)) == 0


def test_numeral_rejects_negatives():
    with pytest.raises(ValueError):
        Numeral(-1)


def test_digit_positions_start_at_one():
    n = Numeral(6)
    assert [n.digit(i) for i in range(1, 5)] == [0, 1, 1, 0]
    with pytest.raises(IndexError):
        n.digit(0)


def test_signed_parts():
    x = SignedNumeral(-5)
    assert x.sign is Sign.NEGATIVE and x.magnitude == 5
    assert SignedNumeral(0).sign is Sign.ZERO
    assert SignedNumeral.from_parts(Sign.POSITIVE, 3) == 3
    with pytest.raises(ValueError):
        SignedNumeral.from_parts(Sign.ZERO, 3)


def test_digit_string_parse_and_value():
    s = DigitString.parse("00110")
    assert s.bits == (0, 1, 1, 0, 0)
    assert s.value == 6 and s.modulus == 32
    assert str(s.extend(1)) == "100110"
    assert DigitString.parse("") == DigitString(())
    with pytest.raises(ValueError):
        DigitString.parse("012")
