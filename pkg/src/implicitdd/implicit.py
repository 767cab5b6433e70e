"""Divided differences of a function defined implicitly by g(x, y) = 0.

Three routes to ``[x_0, ..., x_n]y``:

* ``dd_direct``: solve for ``y_i`` and take the ordinary divided difference;
* ``dd_recurrence``: recurse on lower-order differences of ``y`` over
  consecutive index windows, using bivariate differences of ``g``;
* ``dd_explicit``: sum over polygon dissections of products of face factors,
  using only bivariate differences of ``g``.

Exact mode covers relations linear in y, ``g(x, y) = A(x) y + B(x)`` with
rational-function coefficients, so every ``y_i`` is rational.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence, Union

from .ddcore import BivariateCache, GridSample, UnivariateSamples, udd
from .dissect import Dissection, Face, compositions, iter_face_sets
from .numcore import RationalLike, polyval, to_rational


class DegenerateDenominator(ZeroDivisionError):
    """A divided difference used as a denominator vanished."""


def _poly(coeffs) -> tuple[Fraction, ...]:
    cs = tuple(to_rational(c) for c in coeffs)
    if not cs:
        raise ValueError("polynomial needs at least one coefficient")
    return cs


@dataclass(frozen=True)
class ImplicitRelation:
    """``g(x, y) = (a_num/a_den)(x) * y + (b_num/b_den)(x)``; coefficients ascending."""

    a_num: tuple[Fraction, ...]
    b_num: tuple[Fraction, ...]
    a_den: tuple[Fraction, ...] = (Fraction(1),)
    b_den: tuple[Fraction, ...] = (Fraction(1),)

    def __post_init__(self):
        for name in ("a_num", "b_num", "a_den", "b_den"):
            object.__setattr__(self, name, _poly(getattr(self, name)))
        if not any(self.a_num):
            raise ValueError("A(x) is identically zero; y is not determined")
        if not any(self.a_den) or not any(self.b_den):
            raise ValueError("denominator polynomial is identically zero")

    @classmethod
    def from_dict(cls, data: dict) -> "ImplicitRelation":
        unknown = set(data) - {"a_num", "a_den", "b_num", "b_den"}
        if unknown:
            raise ValueError(f"unknown relation fields: {sorted(unknown)}")
        try:
            return cls(
                a_num=data["a_num"],
                b_num=data["b_num"],
                a_den=data.get("a_den", [1]),
                b_den=data.get("b_den", [1]),
            )
        except KeyError as exc:
            raise ValueError(f"relation is missing field {exc}") from None

    @classmethod
    def from_json(cls, text: str) -> "ImplicitRelation":
        return cls.from_dict(json.loads(text))

    def A(self, x: Fraction) -> Fraction:
        den = polyval(self.a_den, x)
        if den == 0:
            raise ZeroDivisionError(f"A has a pole at x={x}")
        return polyval(self.a_num, x) / den

    def B(self, x: Fraction) -> Fraction:
        den = polyval(self.b_den, x)
        if den == 0:
            raise ZeroDivisionError(f"B has a pole at x={x}")
        return polyval(self.b_num, x) / den

    def g(self, x: RationalLike, y: RationalLike) -> Fraction:
        x, y = to_rational(x), to_rational(y)
        return self.A(x) * y + self.B(x)


def solve_y(rel: ImplicitRelation, x: RationalLike) -> Fraction:
    """The value y(x) with g(x, y(x)) = 0."""
    x = to_rational(x)
    a = rel.A(x)
    if a == 0:
        raise ValueError(f"dg/dy vanishes at x={x}; y is not locally defined")
    return -rel.B(x) / a


@dataclass
class ImplicitProblem:
    relation: ImplicitRelation
    xs: tuple[Fraction, ...]
    ys: tuple[Fraction, ...] = field(init=False)
    grid: GridSample = field(init=False, repr=False)

    def __post_init__(self):
        self.xs = tuple(to_rational(x) for x in self.xs)
        if not self.xs:
            raise ValueError("need at least one abscissa")
        if len(set(self.xs)) != len(self.xs):
            raise ValueError("abscissas must be pairwise distinct")
        self.ys = tuple(solve_y(self.relation, x) for x in self.xs)
        if len(set(self.ys)) != len(self.ys):
            raise ValueError(
                "ordinates y(x_i) coincide; they cannot serve as grid nodes"
            )
        self.grid = GridSample.from_function(self.relation.g, self.xs, self.ys)
        self._g = BivariateCache(self.grid)
        self._windows: dict[tuple[int, int], Fraction] = {}

    @property
    def n(self) -> int:
        return len(self.xs) - 1

    def gdd(self, x_idx: Sequence[int], y_idx: Sequence[int]) -> Fraction:
        """``[i_0..i_s; j_0..j_t]g`` on this problem's grid (memoized)."""
        return self._g(x_idx, y_idx)

    def _denominator(self, x_idx, y_idx) -> Fraction:
        val = self._g(x_idx, y_idx)
        if val == 0:
            raise DegenerateDenominator(
                f"[{_fmt(x_idx)}; {_fmt(y_idx)}]g vanishes"
            )
        return val


def _fmt(idx) -> str:
    return " ".join(str(i) for i in idx)


def make_problem(relation: ImplicitRelation, xs: Sequence[RationalLike]) -> ImplicitProblem:
    return ImplicitProblem(relation, tuple(to_rational(x) for x in xs))


def dd_direct(problem: ImplicitProblem) -> Fraction:
    return udd(UnivariateSamples(problem.xs, problem.ys))


def _first_order(problem: ImplicitProblem, i: int, j: int) -> Fraction:
    # [i j]y = -[i j; j]g / [i; i j]g
    return -problem.gdd((i, j), (j,)) / problem._denominator((i,), (i, j))


def dd_first_order(problem: ImplicitProblem) -> Fraction:
    if problem.n != 1:
        raise ValueError(f"first-order formula needs exactly two points, got {problem.n + 1}")
    return _first_order(problem, 0, 1)


def _window(problem: ImplicitProblem, a: int, b: int) -> Fraction:
    """``[a, a+1, ..., b]y`` by the recurrence, memoized on the problem."""
    memo = problem._windows
    key = (a, b)
    if key in memo:
        return memo[key]
    if b - a == 1:
        val = _first_order(problem, a, b)
    else:
        denom = problem._denominator((a,), (a, b))
        total = Fraction(0)
        for parts in compositions(b - a):
            k = len(parts)
            if k < 2:
                continue
            idx = [a]
            for p in parts:
                idx.append(idx[-1] + p)
            run = _unit_run(parts)
            for s in range(run + 1):
                term = problem.gdd(tuple(range(a, a + s + 1)), tuple(idx[s:]))
                if term == 0:
                    continue
                for l in range(s + 1, k + 1):
                    term *= _window(problem, idx[l - 1], idx[l])
                total += term
        val = -total / denom
    memo[key] = val
    return val


def _unit_run(steps: Sequence[int]) -> int:
    """Length of the initial run of unit steps."""
    t = 0
    for step in steps:
        if step != 1:
            break
        t += 1
    return t


def dd_recurrence(problem: ImplicitProblem) -> Fraction:
    if problem.n < 1:
        raise ValueError("recurrence needs at least two points")
    return _window(problem, 0, problem.n)


def admissible_s(face: Face) -> range:
    """Values of s with ``i_s - i_0 == s``: the face starts with s unit steps."""
    steps = [v - u for u, v in zip(face, face[1:])]
    return range(_unit_run(steps) + 1)


def face_term(problem: ImplicitProblem, face: Face, s: int) -> Fraction:
    """One summand of a face factor for a fixed admissible ``s``."""
    i0, ik = face[0], face[-1]
    val = -problem.gdd(face[: s + 1], face[s:]) / problem._denominator((i0,), (i0, ik))
    for u, v in zip(face[s:], face[s + 1 :]):
        if v - u == 1:
            val *= _first_order(problem, u, v)
    return val


def face_factor(problem: ImplicitProblem, face: Face) -> Fraction:
    return sum((face_term(problem, face, s) for s in admissible_s(face)), Fraction(0))


def dd_explicit(problem: ImplicitProblem) -> Fraction:
    """Sum over all dissections of P(0..n) of the product of face factors."""
    n = problem.n
    if n < 2:
        raise ValueError("the dissection formula applies for n >= 2")
    cache: dict[Face, Fraction] = {}
    total = Fraction(0)
    for faces in iter_face_sets(0, n):
        prod = Fraction(1)
        for f in faces:
            val = cache.get(f)
            if val is None:
                val = cache[f] = face_factor(problem, f)
            prod *= val
            if not prod:
                break
        total += prod
    return total


@dataclass(frozen=True)
class TermDescriptor:
    """One term of the dissection formula: a dissection plus one s per face."""

    dissection: Dissection
    choices: tuple[int, ...]

    def evaluate(self, problem: ImplicitProblem) -> Fraction:
        val = Fraction(1)
        for f, s in zip(self.dissection.faces, self.choices):
            val *= face_term(problem, f, s)
        return val


def iter_terms(n: int) -> Iterator[TermDescriptor]:
    if n < 2:
        raise ValueError("the dissection formula applies for n >= 2")
    for faces in iter_face_sets(0, n):
        d = Dissection.from_faces(n, faces)
        for choices in itertools.product(*(admissible_s(f) for f in d.faces)):
            yield TermDescriptor(d, tuple(choices))


def term_list(problem_or_n: Union[ImplicitProblem, int]) -> list[TermDescriptor]:
    n = problem_or_n.n if isinstance(problem_or_n, ImplicitProblem) else problem_or_n
    return list(iter_terms(n))


METHODS = {
    "direct": dd_direct,
    "rec": dd_recurrence,
    "explicit": dd_explicit,
}
