"""Counting the terms of the dissection formula without the sequence formulas.

Each face ``(i_0, ..., i_k)`` contributes ``t + 1`` choices of s, where t is
the number of initial unit steps; a dissection contributes the product over
its faces.
"""
from __future__ import annotations

from .dissect import Face, iter_face_sets


def admissible_s_count(face: Face) -> int:
    t = 0
    for u, v in zip(face, face[1:]):
        if v - u != 1:
            break
        t += 1
    return t + 1


def count_terms_by_enumeration(n: int) -> int:
    """Stream every dissection of P(0..n) and sum the per-face products."""
    if n < 2:
        raise ValueError(f"term count is defined for n >= 2, got n={n}")
    counts: dict[Face, int] = {}
    total = 0
    for faces in iter_face_sets(0, n):
        prod = 1
        for f in faces:
            c = counts.get(f)
            if c is None:
                c = counts[f] = admissible_s_count(f)
            prod *= c
        total += prod
    return total


def _interval_terms(m: int) -> list[int]:
    """``T[w]`` = term count for a polygon spanning w unit steps (bare edge: 1).

    Split the outer face's step composition into t leading unit steps,
    then a step j >= 2, then an arbitrary tail; the face contributes t + 1.
    ``P[r]`` sums products of ``T`` over all compositions of r.
    """
    T = [0, 1]
    P = [1, 1]
    for w in range(2, m + 1):
        total = w + 1  # all unit steps
        for t in range(w - 1):
            for j in range(2, w - t + 1):
                if t == 0 and j == w:
                    continue  # a single part is not a face
                total += (t + 1) * T[j] * P[w - t - j]
        T.append(total)
        P.append(sum(T[j] * P[w - j] for j in range(1, w + 1)))
    return T


def count_terms_dp(n: int) -> int:
    """Same count by dynamic programming over sub-polygon widths."""
    if n < 2:
        raise ValueError(f"term count is defined for n >= 2, got n={n}")
    return _interval_terms(n)[n]
