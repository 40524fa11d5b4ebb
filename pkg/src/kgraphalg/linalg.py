"""Exact linear independence over Z or Q via Fraction elimination.

Vectors are sparse dicts over arbitrary hashable keys. A family of
integer vectors is independent over Z exactly when it is independent over
Q, so one rational rank computation covers both rings.
"""

from __future__ import annotations

from fractions import Fraction


def rank(vectors: list[dict]) -> int:
    keys = sorted({k for vec in vectors for k in vec}, key=repr)
    index = {k: i for i, k in enumerate(keys)}
    rows = []
    for vec in vectors:
        row = [Fraction(0)] * len(keys)
        for k, c in vec.items():
            row[index[k]] = Fraction(c)
        rows.append(row)
    r = 0
    col = 0
    n_rows, n_cols = len(rows), len(keys)
    while r < n_rows and col < n_cols:
        pivot = next((i for i in range(r, n_rows) if rows[i][col] != 0), None)
        if pivot is None:
            col += 1
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][col]
        for i in range(r + 1, n_rows):
            if rows[i][col] != 0:
                factor = rows[i][col] / pv
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        r += 1
        col += 1
    return r


def independent(vectors: list[dict]) -> bool:
    """True when no nontrivial rational (equivalently integral) combination
    of the vectors vanishes."""
    if any(not vec for vec in vectors):
        return False
    return rank(list(vectors)) == len(vectors)
