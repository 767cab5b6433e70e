"""Leading-order asymptotics of a_n and the relative-error curve.

a_n ~ K n^(-3/2) 9^n with K = 3 / (16 sqrt(2 pi)), from the square-root
singularity of the generating function at x = 1/9.  Exact a_n come from the
linear recurrence; the estimate is evaluated with mpmath at a chosen
working precision.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import mpmath

from .seq import a_linear

DEFAULT_DIGITS = 50


def leading_constant(precision_digits: int = DEFAULT_DIGITS) -> mpmath.mpf:
    with mpmath.workdps(precision_digits):
        return mpmath.mpf(3) / (16 * mpmath.sqrt(2 * mpmath.pi))


def asymptotic_estimate(n: int, precision_digits: int = DEFAULT_DIGITS) -> mpmath.mpf:
    """K n^(-3/2) 9^n."""
    if n < 1:
        raise ValueError("asymptotic estimate needs n >= 1")
    if precision_digits < 10:
        raise ValueError("precision_digits must be >= 10")
    with mpmath.workdps(precision_digits):
        return leading_constant(precision_digits) * mpmath.power(n, mpmath.mpf(-3) / 2) * mpmath.power(9, n)


def relative_error(n: int, a_n: int, precision_digits: int = DEFAULT_DIGITS) -> mpmath.mpf:
    with mpmath.workdps(precision_digits):
        return 1 - asymptotic_estimate(n, precision_digits) / mpmath.mpf(a_n)


def normalized_coefficient(n: int, a_n: int, precision_digits: int = DEFAULT_DIGITS) -> mpmath.mpf:
    """a_n 9^(-n) n^(3/2); tends to the leading constant."""
    with mpmath.workdps(precision_digits):
        return mpmath.mpf(a_n) * mpmath.power(9, -n) * mpmath.power(n, mpmath.mpf(3) / 2)


@dataclass(frozen=True)
class AsymptoticRow:
    n: int
    a_n_digits: int
    rel_err: mpmath.mpf


@dataclass(frozen=True)
class AsymptoticReport:
    rows: tuple[AsymptoticRow, ...]
    precision_digits: int

    def to_csv(self, significant_digits: int = 12) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "rel_err"])
        for row in self.rows:
            writer.writerow([row.n, mpmath.nstr(row.rel_err, significant_digits, min_fixed=-3, max_fixed=0)])
        return buf.getvalue()


def default_rows(n_max: int) -> list[int]:
    """Every n up to 100, then every tenth; n_max always included."""
    ns = [n for n in range(1, min(n_max, 100) + 1)]
    ns += [n for n in range(110, n_max + 1, 10)]
    if ns[-1] != n_max:
        ns.append(n_max)
    return ns


def relative_error_table(
    n_max: int, stride: int | None = None, precision_digits: int = DEFAULT_DIGITS
) -> AsymptoticReport:
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    if stride is None:
        ns = default_rows(n_max)
    else:
        if stride < 1:
            raise ValueError("stride must be >= 1")
        ns = list(range(1, n_max + 1, stride))
        if ns[-1] != n_max:
            ns.append(n_max)
    a = a_linear(n_max)
    rows = tuple(
        AsymptoticRow(n, len(str(a[n])), relative_error(n, a[n], precision_digits))
        for n in ns
    )
    return AsymptoticReport(rows, precision_digits)
