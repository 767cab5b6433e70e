"""Univariate and bivariate divided differences at distinct rational nodes."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .numcore import RationalLike, to_rational


def _check_distinct(values: Sequence[Fraction], what: str) -> None:
    if len(set(values)) != len(values):
        raise ValueError(f"{what} must be pairwise distinct")


@dataclass(frozen=True)
class UnivariateSamples:
    """Points ``(x_i, f(x_i))`` with pairwise distinct abscissas."""

    xs: tuple[Fraction, ...]
    fxs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.xs) != len(self.fxs):
            raise ValueError("xs and fxs differ in length")
        if not self.xs:
            raise ValueError("at least one sample is required")
        _check_distinct(self.xs, "abscissas")

    @classmethod
    def from_pairs(cls, pairs) -> "UnivariateSamples":
        pairs = list(pairs)
        return cls(
            tuple(to_rational(x) for x, _ in pairs),
            tuple(to_rational(fx) for _, fx in pairs),
        )

    @classmethod
    def from_function(cls, f, xs) -> "UnivariateSamples":
        xs = tuple(to_rational(x) for x in xs)
        return cls(xs, tuple(to_rational(f(x)) for x in xs))

    @property
    def order(self) -> int:
        return len(self.xs) - 1


def udd_table(samples: UnivariateSamples) -> list[list[Fraction]]:
    """All divided differences over consecutive nodes.

    ``table[i][j] == [x_i, ..., x_j]f`` for ``i <= j``; entries with ``i > j``
    are ``None``.
    """
    xs = samples.xs
    n = len(xs)
    table: list[list] = [[None] * n for _ in range(n)]
    for i in range(n):
        table[i][i] = samples.fxs[i]
    for width in range(1, n):
        for i in range(n - width):
            j = i + width
            table[i][j] = (table[i + 1][j] - table[i][j - 1]) / (xs[j] - xs[i])
    return table


def _udd_values(xs: Sequence[Fraction], fxs: Sequence[Fraction]) -> Fraction:
    # in-place Newton column, O(n^2)
    col = list(fxs)
    n = len(xs)
    for width in range(1, n):
        for i in range(n - width):
            col[i] = (col[i + 1] - col[i]) / (xs[i + width] - xs[i])
    return col[0]


def udd(samples: UnivariateSamples) -> Fraction:
    """The divided difference ``[x_0, ..., x_n]f``."""
    return _udd_values(samples.xs, samples.fxs)


@dataclass(frozen=True)
class GridSample:
    """Values ``g(xs[i], ys[j])`` on a rectangular grid of distinct nodes."""

    xs: tuple[Fraction, ...]
    ys: tuple[Fraction, ...]
    values: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if not self.xs or not self.ys:
            raise ValueError("grid needs at least one node in each direction")
        _check_distinct(self.xs, "grid abscissas")
        _check_distinct(self.ys, "grid ordinates")
        if len(self.values) != len(self.xs) or any(
            len(row) != len(self.ys) for row in self.values
        ):
            raise ValueError("values must be a len(xs) x len(ys) array")

    @classmethod
    def from_function(cls, g, xs, ys) -> "GridSample":
        xs = tuple(to_rational(x) for x in xs)
        ys = tuple(to_rational(y) for y in ys)
        values = tuple(tuple(to_rational(g(x, y)) for y in ys) for x in xs)
        return cls(xs, ys, values)

    @classmethod
    def from_values(cls, xs, ys, values) -> "GridSample":
        return cls(
            tuple(to_rational(x) for x in xs),
            tuple(to_rational(y) for y in ys),
            tuple(tuple(to_rational(v) for v in row) for row in values),
        )

    def subgrid(self, x_idx: Sequence[int], y_idx: Sequence[int]) -> "GridSample":
        return GridSample(
            tuple(self.xs[i] for i in x_idx),
            tuple(self.ys[j] for j in y_idx),
            tuple(tuple(self.values[i][j] for j in y_idx) for i in x_idx),
        )


def bdd(grid: GridSample, first: str = "x") -> Fraction:
    """Bivariate divided difference ``[x_0..x_m; y_0..y_n]g``.

    ``first`` selects whether the x-direction (``"x"``) or y-direction
    (``"y"``) is reduced first; both give the same value.
    """
    if first == "x":
        cols = [
            _udd_values(grid.xs, [row[j] for row in grid.values])
            for j in range(len(grid.ys))
        ]
        return _udd_values(grid.ys, cols)
    if first == "y":
        rows = [_udd_values(grid.ys, row) for row in grid.values]
        return _udd_values(grid.xs, rows)
    raise ValueError(f"first must be 'x' or 'y', got {first!r}")


def _check_index_list(idx: Sequence[int], size: int, what: str) -> tuple[int, ...]:
    idx = tuple(idx)
    if not idx:
        raise ValueError(f"{what} index list is empty")
    if idx[0] < 0 or idx[-1] >= size:
        raise IndexError(f"{what} index out of range: {idx}")
    if any(b <= a for a, b in zip(idx, idx[1:])):
        raise ValueError(f"{what} indices must be strictly increasing: {idx}")
    return idx


def bdd_on_index_ranges(
    gfull: GridSample, x_idx: Sequence[int], y_idx: Sequence[int]
) -> Fraction:
    """``[i_0 ... i_s; j_0 ... j_t]g`` read off the full grid."""
    x_idx = _check_index_list(x_idx, len(gfull.xs), "x")
    y_idx = _check_index_list(y_idx, len(gfull.ys), "y")
    return bdd(gfull.subgrid(x_idx, y_idx))


class BivariateCache:
    """Memoized sub-grid divided differences over one fixed grid.

    Inner x-differences are cached per ``(x_idx, column)`` so that sub-grids
    sharing their x-index list share that work.
    """

    def __init__(self, grid: GridSample):
        self.grid = grid
        self._cols: dict[tuple[tuple[int, ...], int], Fraction] = {}
        self._full: dict[tuple[tuple[int, ...], tuple[int, ...]], Fraction] = {}

    def _column(self, x_idx: tuple[int, ...], j: int) -> Fraction:
        key = (x_idx, j)
        val = self._cols.get(key)
        if val is None:
            g = self.grid
            val = _udd_values([g.xs[i] for i in x_idx], [g.values[i][j] for i in x_idx])
            self._cols[key] = val
        return val

    def __call__(self, x_idx: Sequence[int], y_idx: Sequence[int]) -> Fraction:
        key = (tuple(x_idx), tuple(y_idx))
        val = self._full.get(key)
        if val is None:
            xi, yi = key
            _check_index_list(xi, len(self.grid.xs), "x")
            _check_index_list(yi, len(self.grid.ys), "y")
            val = _udd_values(
                [self.grid.ys[j] for j in yi], [self._column(xi, j) for j in yi]
            )
            self._full[key] = val
        return val


def divided_difference(f, xs: Sequence[RationalLike]) -> Fraction:
    """Shortcut: ``[x_0, ..., x_n]f`` for a callable ``f``."""
    return udd(UnivariateSamples.from_function(f, xs))
