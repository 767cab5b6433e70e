"""The term-count sequence a_n by independent characterizations.

All producers return plain lists of Python ints indexed from 0 with
``a_0 = a_1 = 1``.  Nothing here is treated as the reference: callers
compare producers against each other.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Sequence

from .numcore import RationalLike, RationalSeries, series_inv, series_sqrt, to_rational

IntegerSequence = list

TABLE1 = [1, 1, 3, 13, 71, 441, 2955, 20805, 151695, 1135345, 8671763, 67320573]


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("catalan(n) needs n >= 0")
    return comb(2 * n, n) // (n + 1)


def _check_n_max(n_max: int) -> None:
    if n_max < 0:
        raise ValueError("n_max must be >= 0")


def a_quadratic(n_max: int) -> IntegerSequence:
    """a_n = 1 + 2 * sum_{m=1}^{n-1} a_m a_{n-m}."""
    _check_n_max(n_max)
    a = [1, 1][: n_max + 1]
    for n in range(2, n_max + 1):
        a.append(1 + 2 * sum(a[m] * a[n - m] for m in range(1, n)))
    return a


def a_linear(n_max: int) -> IntegerSequence:
    """n a_n = (10n - 14) a_{n-1} + (18 - 9n) a_{n-2}; exact division asserted."""
    _check_n_max(n_max)
    a = [1, 1][: n_max + 1]
    for n in range(2, n_max + 1):
        rhs = (10 * n - 14) * a[n - 1] + (18 - 9 * n) * a[n - 2]
        q, r = divmod(rhs, n)
        if r:
            raise ArithmeticError(f"non-integral a_{n} = {rhs}/{n}")
        a.append(q)
    return a


def generating_function(order: int) -> RationalSeries:
    """G(x) = 5/4 - 1/4 sqrt((1 - 9x)/(1 - x)), truncated at ``order``."""
    one_minus_9x = RationalSeries([1, -9], order)
    one_minus_x = RationalSeries([1, -1], order)
    root = series_sqrt(one_minus_9x * series_inv(one_minus_x))
    return Fraction(5, 4) - root * Fraction(1, 4)


def _as_ints(coeffs) -> list[int]:
    out = []
    for k, c in enumerate(coeffs):
        if c.denominator != 1:
            raise ArithmeticError(f"coefficient {k} is not an integer: {c}")
        out.append(c.numerator)
    return out


def a_gf(n_max: int) -> IntegerSequence:
    _check_n_max(n_max)
    return _as_ints(generating_function(n_max).coeffs)


def minimum_polynomial_residual(order: int = 64) -> RationalSeries:
    """2G^2 - 5G + 2 + 1/(1-x); identically zero when G is right."""
    G = generating_function(order)
    return 2 * G * G - 5 * G + 2 + series_inv(RationalSeries([1, -1], order))


def differential_equation_residual(order: int = 64) -> RationalSeries:
    """(1 - 10x + 9x^2) G' + 4G - 5, known through x^(order-1)."""
    G = generating_function(order)
    dG = G.derivative()
    low = order - 1
    return RationalSeries([1, -10, 9], low) * dG + 4 * G.truncate(low) - 5


def pochhammer(a: RationalLike, n: int) -> Fraction:
    """Rising factorial (a)_n."""
    if n < 0:
        raise ValueError("pochhammer needs n >= 0")
    a = to_rational(a)
    out = Fraction(1)
    for k in range(n):
        out *= a + k
    return out


def _nonpositive_int(v: Fraction) -> bool:
    return v.denominator == 1 and v <= 0


def hyp2f1_terminating(a: RationalLike, b: RationalLike, c: RationalLike, z: RationalLike) -> Fraction:
    """Exact 2F1(a, b; c; z) when a or b is a nonpositive integer.

    The series stops after ``-b`` (or ``-a``) terms.  Inputs for which
    ``(c)_k`` vanishes before the series terminates are refused, as are
    non-terminating parameter sets.
    """
    a, b, c, z = (to_rational(v) for v in (a, b, c, z))
    bounds = [-int(v) for v in (a, b) if _nonpositive_int(v)]
    if not bounds:
        raise ValueError(f"2F1({a}, {b}; {c}; z) does not terminate")
    length = min(bounds)
    if _nonpositive_int(c) and -c < length:
        raise ValueError(f"(c)_k vanishes before termination for c={c}")
    total = term = Fraction(1)
    for k in range(length):
        term = term * (a + k) * (b + k) / ((c + k) * (k + 1)) * z
        total += term
    return total


def gauss_contiguous_residual(a: RationalLike, b: RationalLike, c: RationalLike, z: RationalLike) -> Fraction:
    """(c-b) F(a,b-1) + (2b-c+(a-b)z) F(a,b) + b(z-1) F(a,b+1), all at (c; z).

    Each series must terminate unless its coefficient is zero, in which case
    the term is dropped without evaluation.
    """
    a, b, c, z = (to_rational(v) for v in (a, b, c, z))
    total = Fraction(0)
    for coeff, bb in (
        (c - b, b - 1),
        (2 * b - c + (a - b) * z, b),
        (b * (z - 1), b + 1),
    ):
        if coeff:
            total += coeff * hyp2f1_terminating(a, bb, c, z)
    return total


def a_hypergeometric(n_max: int) -> IntegerSequence:
    """a_n = 2F1(1/2, 1-n; 2; -8) for n >= 1; a_0 = 1 by convention."""
    _check_n_max(n_max)
    values = [Fraction(1)]
    for n in range(1, n_max + 1):
        values.append(hyp2f1_terminating(Fraction(1, 2), 1 - n, 2, -8))
    return _as_ints(values)


def binomial_transform(s: Sequence[int]) -> IntegerSequence:
    return [sum(comb(n, k) * s[k] for k in range(n + 1)) for n in range(len(s))]


def inverse_binomial_transform(b: Sequence[int]) -> IntegerSequence:
    return [
        sum((-1) ** (n - k) * comb(n, k) * b[k] for k in range(n + 1))
        for n in range(len(b))
    ]


def a_binomial_transform(n_max: int) -> IntegerSequence:
    """a_0 = 1, then a_{n+1} = binomial transform of 2^k C_k at n."""
    _check_n_max(n_max)
    base = [2**k * catalan(k) for k in range(n_max)]
    return [1] + binomial_transform(base)


def catalan_series(order: int) -> RationalSeries:
    """(1 - sqrt(1 - 4x)) / (2x) through x^order."""
    root = series_sqrt(RationalSeries([1, -4], order + 1))
    return ((1 - root) * Fraction(1, 2)).shift_down()


def catalan_gf_check(n_max: int) -> bool:
    _check_n_max(n_max)
    coeffs = catalan_series(n_max).coeffs
    return all(coeffs[k] == catalan(k) for k in range(n_max + 1))


def a_enumeration(n_max: int) -> IntegerSequence:
    """Term counts by streaming over dissections (slow past n = 12)."""
    from .terms import count_terms_by_enumeration

    _check_n_max(n_max)
    return [1, 1][: n_max + 1] + [count_terms_by_enumeration(n) for n in range(2, n_max + 1)]


METHODS = {
    "quad": a_quadratic,
    "lin": a_linear,
    "gf": a_gf,
    "hyp": a_hypergeometric,
    "binom": a_binomial_transform,
    "enum": a_enumeration,
}
