from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from implicitdd.numcore import (
    RationalSeries,
    format_rational,
    series_inv,
    series_mul,
    series_sqrt,
    to_rational,
)

from conftest import small_fractions


def series_of(order, nonzero_const=False, unit_const=False):
    coeffs = st.lists(small_fractions(9, 5), min_size=order + 1, max_size=order + 1)
    if unit_const:
        coeffs = coeffs.map(lambda cs: [Fraction(1)] + cs[1:])
    elif nonzero_const:
        coeffs = coeffs.filter(lambda cs: cs[0] != 0)
    return coeffs.map(lambda cs: RationalSeries(cs, order))


def test_to_rational_parses_exact_forms():
    assert to_rational("3/6") == Fraction(1, 2)
    assert to_rational("-7") == -7
    assert to_rational(" 4/-8 ") == Fraction(-1, 2)
    for bad in ("0.5", "1e3", "1/0", "", "a/b"):
        with pytest.raises(ValueError):
            to_rational(bad)


def test_denominator_normalized():
    r = to_rational("6/-4")
    assert (r.numerator, r.denominator) == (-3, 2)
    assert format_rational(r) == "-3/2"
    assert format_rational(Fraction(8, 4)) == "2"


def test_series_mul_examples():
    p = series_mul(RationalSeries([1, 1], 2), RationalSeries([1, -1], 2))
    assert p.coeffs == (1, 0, -1)
    a = RationalSeries([3, "1/2", -2], 2)
    assert a * RationalSeries.constant(1, 2) == a


def test_catalan_convolution():
    # oracle: convolution of closed-form Catalan numbers
    cat = [comb(2 * k, k) // (k + 1) for k in range(5)]
    expected = sum(cat[k] * cat[3 - k] for k in range(4))
    assert expected == 14 == cat[4]
    c = RationalSeries(cat[:4], 3)
    assert series_mul(c, c)[3] == 14


def test_mismatched_orders_rejected():
    with pytest.raises(ValueError):
        series_mul(RationalSeries([1], 2), RationalSeries([1], 3))
    with pytest.raises(ValueError):
        RationalSeries([1], 2) + RationalSeries([1], 1)


def test_series_inv_examples():
    assert series_inv(RationalSeries([1, -1], 4)).coeffs == (1, 1, 1, 1, 1)
    assert series_inv(RationalSeries([1], 0)).coeffs == (1,)
    assert series_inv(RationalSeries([1, -9], 3)).coeffs == (1, 9, 81, 729)
    with pytest.raises(ZeroDivisionError):
        series_inv(RationalSeries([0, 1], 3))


def test_series_sqrt_examples():
    assert series_sqrt(RationalSeries([1], 5)).coeffs == (1, 0, 0, 0, 0, 0)
    root = series_sqrt(RationalSeries([1, -4], 3))
    assert root.coeffs == (1, -2, -2, -4)
    assert root * root == RationalSeries([1, -4], 3)
    with pytest.raises(ValueError):
        series_sqrt(RationalSeries([4, 1], 3))


def test_sqrt_yields_table_prefix():
    r = series_sqrt(RationalSeries([1, -9], 4) * series_inv(RationalSeries([1, -1], 4)))
    g = Fraction(5, 4) - r * Fraction(1, 4)
    assert g.coeffs == (1, 1, 3, 13, 71)


def test_derivative_and_shift():
    s = RationalSeries([0, 2, 3, 4], 3)
    assert s.derivative().coeffs == (2, 6, 12)
    assert s.shift_down().coeffs == (2, 3, 4)
    with pytest.raises(ValueError):
        RationalSeries([1, 2], 1).shift_down()


N = 16


@settings(max_examples=100, deadline=None)
@given(series_of(N), series_of(N), series_of(N))
def test_mul_commutative_associative(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)


@settings(max_examples=100, deadline=None)
@given(series_of(N, nonzero_const=True))
def test_inv_round_trip(a):
    assert a * series_inv(a) == RationalSeries.constant(1, N)


@settings(max_examples=100, deadline=None)
@given(series_of(N, unit_const=True))
def test_sqrt_round_trip(a):
    r = series_sqrt(a)
    assert r[0] == 1
    assert r * r == a


@settings(max_examples=200, deadline=None)
@given(small_fractions(), small_fractions(), small_fractions())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a + (-a) == 0
    if a != 0:
        assert a * (1 / a) == 1
    for v in (a + b, a * b, a - c):
        assert v.denominator > 0
