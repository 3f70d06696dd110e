"""Exact rational linear algebra via fraction-free (Bareiss) elimination.

Rows are scaled to integers first; elimination then stays in Z and every
division is exact.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

Rows = Sequence[Sequence[Fraction]]


def _integer_rows(rows: Rows) -> list[list[int]]:
    out = []
    for row in rows:
        den = lcm(*(Fraction(v).denominator for v in row)) if row else 1
        out.append([int(Fraction(v) * den) for v in row])
    return out


def echelon(rows: Rows) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form.

    Pivot columns are chosen left to right, so they are the
    lexicographically first set of independent columns.
    Returns (echelon rows, pivot column indices, 0-based).
    """
    A = _integer_rows(rows)
    m = len(A)
    ncols = len(A[0]) if m else 0
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == m:
            break
        piv = next((i for i in range(r, m) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        for i in range(r + 1, m):
            for j in range(c + 1, ncols):
                A[i][j] = (A[r][c] * A[i][j] - A[i][c] * A[r][j]) // prev
            A[i][c] = 0
        prev = A[r][c]
        pivots.append(c)
        r += 1
    return A, pivots


def rank(rows: Rows) -> int:
    return len(echelon(rows)[1])


def det(rows: Rows) -> Fraction:
    """Determinant of a square rational matrix (Bareiss)."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    ints = []
    for row in rows:
        den = lcm(*(Fraction(v).denominator for v in row))
        scale /= den
        ints.append([int(Fraction(v) * den) for v in row])
    A = ints
    sign = 1
    prev = 1
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if A[i][k]), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            A[k], A[piv] = A[piv], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[k][k] * A[i][j] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1] * scale


def transpose(rows: Rows) -> list[list[Fraction]]:
    return [list(col) for col in zip(*rows)]


def solve_free(rows: Rows) -> tuple[list[int], list[int], list[list[Fraction]]]:
    """Express the pivot variables of ``rows @ y = 0`` through the free ones.

    Returns (pivot vars, free vars, D) with 0-based indices such that
    y[pivot[a]] = -sum_b D[a][b] * y[free[b]].
    """
    A, pivots = echelon(rows)
    ncols = len(rows[0]) if rows else 0
    free = [c for c in range(ncols) if c not in pivots]
    r = len(pivots)
    D = [[Fraction(0)] * len(free) for _ in range(r)]
    for b, f in enumerate(free):
        # back substitution with y_f = 1, other free vars 0
        y = {f: Fraction(1)}
        for a in range(r - 1, -1, -1):
            c = pivots[a]
            s = sum((A[a][j] * y.get(j, 0) for j in range(c + 1, ncols)), Fraction(0))
            y[c] = -s / A[a][c]
        for a, c in enumerate(pivots):
            D[a][b] = -y[c]
    return pivots, free, D
