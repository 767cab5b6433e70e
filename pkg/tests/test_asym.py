import math

import mpmath
import pytest

from implicitdd.asym import (
    asymptotic_estimate,
    default_rows,
    leading_constant,
    relative_error,
    relative_error_table,
)


def test_leading_constant():
    # 3 / (16 sqrt(2 pi)), cross-checked against double precision
    ref = 3 / (16 * math.sqrt(2 * math.pi))
    assert abs(float(leading_constant(40)) - ref) < 1e-15
    assert mpmath.nstr(leading_constant(), 6) == "0.0748017"


def test_estimate_at_one():
    assert mpmath.nstr(asymptotic_estimate(1), 5) == "0.67322"
    assert abs(float(asymptotic_estimate(1)) - 9 * 3 / (16 * math.sqrt(2 * math.pi))) < 1e-14


def test_estimate_ratio():
    with mpmath.workdps(50):
        for n in (2, 7, 100, 1000):
            ratio = asymptotic_estimate(n) / asymptotic_estimate(n - 1)
            expected = 9 * (mpmath.mpf(n - 1) / n) ** mpmath.mpf(1.5)
            assert abs(ratio / expected - 1) < mpmath.mpf(10) ** -40


def test_estimate_errors():
    with pytest.raises(ValueError):
        asymptotic_estimate(0)
    with pytest.raises(ValueError):
        asymptotic_estimate(5, precision_digits=5)


def test_row_n2_sign():
    est = asymptotic_estimate(2)
    assert 2.14 < est < 2.15
    assert relative_error(2, 3) > 0


def test_table_rows():
    rep = relative_error_table(250)
    ns = [r.n for r in rep.rows]
    assert ns == default_rows(250)
    assert ns[:3] == [1, 2, 3] and 100 in ns and 105 not in ns and 110 in ns and ns[-1] == 250
    assert all(b > a for a, b in zip(ns, ns[1:]))
    assert rep.rows[1].a_n_digits == 1


def test_table_stride():
    rep = relative_error_table(23, stride=5)
    assert [r.n for r in rep.rows] == [1, 6, 11, 16, 21, 23]
    with pytest.raises(ValueError):
        relative_error_table(1)


def test_decay_rate():
    rep = relative_error_table(1000, stride=1)
    err = {r.n: r.rel_err for r in rep.rows}
    assert abs(err[1000] / err[500] - mpmath.mpf(0.5)) < 0.1


def test_csv_format():
    text = relative_error_table(12, stride=1).to_csv(significant_digits=8)
    lines = text.splitlines()
    assert lines[0] == "n,rel_err"
    assert len(lines) == 13
    n, val = lines[2].split(",")
    assert n == "2" and abs(float(val) - float(relative_error(2, 3))) < 1e-7
