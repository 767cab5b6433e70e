"""Dissections of a convex polygon with vertices labelled 0..n.

A dissection is stored as its set of bounded faces, each face the increasing
tuple of its vertex labels.  Enumeration recurses on the face that contains
the edge (0, n): pick its vertex set, then dissect every sub-polygon cut off
by a non-unit step of that face independently.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterator, Sequence

Face = tuple[int, ...]


@dataclass(frozen=True)
class Dissection:
    n: int
    faces: tuple[Face, ...]

    @classmethod
    def from_faces(cls, n: int, faces) -> "Dissection":
        return cls(n, tuple(sorted(tuple(f) for f in faces)))

    def diagonals(self) -> set[tuple[int, int]]:
        return {e for f in self.faces for e in face_edges(f) if not _is_boundary(e, self.n)}

    def to_json(self) -> str:
        return json.dumps([list(f) for f in self.faces], separators=(",", ":"))


def face_edges(face: Face) -> list[tuple[int, int]]:
    return list(zip(face, face[1:])) + [(face[0], face[-1])]


def _is_boundary(edge: tuple[int, int], n: int) -> bool:
    a, b = edge
    return b - a == 1 or (a, b) == (0, n)


def _check_n(n: int) -> None:
    if n < 2:
        raise ValueError(f"a polygon needs n >= 2 (vertices 0..n), got n={n}")


def iter_face_sets(a: int, b: int) -> Iterator[tuple[Face, ...]]:
    """Stream face tuples of all dissections of the polygon ``a, a+1, ..., b``.

    The first face of every yielded tuple is the one containing edge (a, b).
    """
    interior = range(a + 1, b)
    for size in range(1, b - a):
        for middle in itertools.combinations(interior, size):
            verts = (a, *middle, b)
            gaps = [(u, v) for u, v in zip(verts, verts[1:]) if v - u >= 2]
            for rest in _product_of_gaps(gaps):
                yield (verts, *rest)


def _product_of_gaps(gaps: Sequence[tuple[int, int]]) -> Iterator[tuple[Face, ...]]:
    if not gaps:
        yield ()
        return
    (u, v), tail = gaps[0], gaps[1:]
    for first in iter_face_sets(u, v):
        for rest in _product_of_gaps(tail):
            yield first + rest


def iter_dissections(n: int) -> Iterator[Dissection]:
    """Stream all dissections of P(0..n) in generation order."""
    _check_n(n)
    for faces in iter_face_sets(0, n):
        yield Dissection.from_faces(n, faces)


def enumerate_dissections(n: int) -> list[Dissection]:
    """All dissections of P(0..n) in canonical (lexicographic) order."""
    return sorted(iter_dissections(n), key=lambda d: d.faces)


def _interval_counts(m: int) -> list[int]:
    """``D[w]`` = dissections of a polygon spanning w unit steps (bare edge: 1).

    The outer face splits the span into a composition with at least two
    parts; ``P[r]`` sums products of ``D`` over all compositions of r.
    """
    D = [0, 1]
    P = [1, 1]
    for w in range(2, m + 1):
        D.append(sum(D[j] * P[w - j] for j in range(1, w)))
        # one-part composition gives D[w]; the rest is the sum just computed
        P.append(2 * D[w])
    return D


def compositions(m: int) -> Iterator[tuple[int, ...]]:
    for cuts in itertools.product((False, True), repeat=m - 1):
        parts, run = [], 1
        for cut in cuts:
            if cut:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        yield tuple(parts)


def count_dissections(n: int) -> int:
    """|P(0..n)| by interval dynamic programming, without enumeration."""
    _check_n(n)
    return _interval_counts(n)[n]


def count_dissections_closed_form(n: int) -> int:
    """Little Schroeder (super-Catalan) number for an (n+1)-gon."""
    _check_n(n)
    total = sum(comb(n - 1, k) * comb(n - 1 + k, k - 1) for k in range(1, n))
    value = Fraction(total, n - 1)
    if value.denominator != 1:
        raise ArithmeticError(f"closed form is not integral at n={n}: {value}")
    return value.numerator


def validate_dissection(d: Dissection) -> bool:
    """True iff ``d`` is a dissection of the convex polygon 0..d.n."""
    n = d.n
    if not isinstance(n, int) or n < 2 or not d.faces:
        return False
    if len(set(d.faces)) != len(d.faces):
        return False
    multiplicity: dict[tuple[int, int], int] = {}
    for f in d.faces:
        if len(f) < 3 or f[0] < 0 or f[-1] > n:
            return False
        if any(v <= u for u, v in zip(f, f[1:])):
            return False
        for e in face_edges(f):
            multiplicity[e] = multiplicity.get(e, 0) + 1
    for j in range(n):
        if multiplicity.pop((j, j + 1), 0) != 1:
            return False
    if multiplicity.pop((0, n), 0) != 1:
        return False
    # whatever is left is a diagonal
    if any(m != 2 for m in multiplicity.values()):
        return False
    diags = sorted(multiplicity)
    for (a, b), (c, e) in itertools.combinations(diags, 2):
        if a < c < b < e or c < a < e < b:
            return False
    return sum(len(f) - 2 for f in d.faces) == n - 1


def dissections_to_json(dissections) -> str:
    return json.dumps([[list(f) for f in d.faces] for d in dissections])
