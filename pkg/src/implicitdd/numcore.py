"""Exact rational scalars and truncated power series over the rationals.

Scalars are plain :class:`fractions.Fraction` values; every other module
computes in them.  :class:`RationalSeries` carries an explicit truncation
order and refuses to combine series of different orders.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

BigRational = Fraction
RationalLike = Union[int, Fraction, str]


def to_rational(value: RationalLike) -> Fraction:
    """Coerce ``value`` to a Fraction.

    Strings must be ``"p/q"`` or a bare integer; decimal notation is
    rejected so that no input is ever silently rounded.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(ch in text for ch in ".eE"):
            raise ValueError(f"not an exact rational: {value!r}")
        num, sep, den = text.partition("/")
        try:
            p = int(num)
            q = int(den) if sep else 1
        except ValueError:
            raise ValueError(f"not an exact rational: {value!r}") from None
        if q == 0:
            raise ValueError(f"zero denominator: {value!r}")
        return Fraction(p, q)
    raise TypeError(f"cannot convert {type(value).__name__} to a rational")


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class RationalSeries:
    """Power series ``c_0 + c_1 x + ... + c_N x^N + O(x^(N+1))``."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike], order: int | None = None):
        cs = [to_rational(c) for c in coeffs]
        if order is None:
            if not cs:
                raise ValueError("empty coefficient list needs an explicit order")
            order = len(cs) - 1
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        if len(cs) > order + 1:
            cs = cs[: order + 1]
        else:
            cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        self._coeffs = tuple(cs)

    @classmethod
    def constant(cls, c: RationalLike, order: int) -> "RationalSeries":
        return cls([c], order)

    @classmethod
    def x(cls, order: int) -> "RationalSeries":
        return cls([0, 1], order)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self._coeffs[k]

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        body = ", ".join(format_rational(c) for c in self._coeffs)
        return f"RationalSeries([{body}], order={self.order})"

    def _coerce(self, other) -> "RationalSeries":
        if isinstance(other, RationalSeries):
            if other.order != self.order:
                raise ValueError(
                    f"truncation orders differ: {self.order} != {other.order}"
                )
            return other
        return RationalSeries.constant(to_rational(other), self.order)

    def __add__(self, other) -> "RationalSeries":
        o = self._coerce(other)
        return RationalSeries([a + b for a, b in zip(self._coeffs, o._coeffs)])

    __radd__ = __add__

    def __neg__(self) -> "RationalSeries":
        return RationalSeries([-a for a in self._coeffs])

    def __sub__(self, other) -> "RationalSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "RationalSeries":
        return self._coerce(other) - self

    def __mul__(self, other) -> "RationalSeries":
        if isinstance(other, RationalSeries):
            return series_mul(self, other)
        c = to_rational(other)
        return RationalSeries([c * a for a in self._coeffs])

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalSeries":
        if isinstance(other, RationalSeries):
            return series_mul(self, series_inv(other))
        c = to_rational(other)
        return RationalSeries([a / c for a in self._coeffs])

    def __pow__(self, k: int) -> "RationalSeries":
        if k < 0:
            return series_inv(self) ** (-k)
        result = RationalSeries.constant(1, self.order)
        for _ in range(k):
            result = result * self
        return result

    def derivative(self) -> "RationalSeries":
        """Formal derivative; the result is only known to order N-1."""
        if self.order == 0:
            return RationalSeries([0], 0)
        return RationalSeries([k * c for k, c in enumerate(self._coeffs) if k])

    def truncate(self, order: int) -> "RationalSeries":
        if order > self.order:
            raise ValueError("cannot raise the truncation order")
        return RationalSeries(self._coeffs[: order + 1])

    def shift_down(self) -> "RationalSeries":
        """Divide by x.  The constant term must vanish; the order drops by one."""
        if self._coeffs[0] != 0:
            raise ValueError("division by x needs a zero constant term")
        if self.order == 0:
            raise ValueError("order-0 series cannot be divided by x")
        return RationalSeries(self._coeffs[1:])

    def is_zero(self) -> bool:
        return not any(self._coeffs)


def series_mul(a: RationalSeries, b: RationalSeries) -> RationalSeries:
    if a.order != b.order:
        raise ValueError(f"truncation orders differ: {a.order} != {b.order}")
    ac, bc = a.coeffs, b.coeffs
    out = []
    for n in range(a.order + 1):
        out.append(sum((ac[k] * bc[n - k] for k in range(n + 1)), Fraction(0)))
    return RationalSeries(out)


def series_inv(a: RationalSeries) -> RationalSeries:
    ac = a.coeffs
    if ac[0] == 0:
        raise ZeroDivisionError("series with zero constant term has no inverse")
    inv0 = 1 / ac[0]
    out = [inv0]
    for n in range(1, a.order + 1):
        s = sum((ac[k] * out[n - k] for k in range(1, n + 1)), Fraction(0))
        out.append(-s * inv0)
    return RationalSeries(out)


def series_sqrt(a: RationalSeries) -> RationalSeries:
    """Square root with constant term 1, solved coefficient by coefficient.

    From ``(sum c_k x^k)^2 = a``: ``2 c_0 c_n = a_n - sum_{k=1}^{n-1} c_k c_{n-k}``.
    """
    ac = a.coeffs
    if ac[0] != 1:
        raise ValueError("series_sqrt needs constant term 1")
    out = [Fraction(1)]
    for n in range(1, a.order + 1):
        s = sum((out[k] * out[n - k] for k in range(1, n)), Fraction(0))
        out.append((ac[n] - s) / 2)
    return RationalSeries(out)


def polyval(coeffs: Sequence[Fraction], x: Fraction) -> Fraction:
    """Horner evaluation, coefficients in ascending degree."""
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc
