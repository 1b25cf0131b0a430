"""Exact dense linear algebra: fraction-free determinants and rational kernels."""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence, TypeVar

T = TypeVar("T")


def bareiss_det(
    matrix: Sequence[Sequence[T]],
    exact_div: Callable[[T, T], T] | None = None,
    zero: T = 0,
    one: T = 1,
) -> T:
    """Determinant by fraction-free (Bareiss) elimination.

    Works over any integral domain whose elements support ``+ - *`` and an
    exact division ``exact_div(a, b)``; defaults to ``/`` which is exact for
    ints and Fractions here because every Bareiss quotient is exact.
    """
    n = len(matrix)
    if n == 0:
        return one
    if any(len(row) != n for row in matrix):
        raise ValueError("determinant requires a square matrix")
    if exact_div is None:
        def exact_div(a, b):
            q = Fraction(a) / b
            return q.numerator if q.denominator == 1 else q
    a = [list(row) for row in matrix]
    sign = 1
    prev = one
    for k in range(n - 1):
        if a[k][k] == zero:
            for r in range(k + 1, n):
                if a[r][k] != zero:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return zero
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = exact_div(a[i][j] * pivot - a[i][k] * a[k][j], prev)
            a[i][k] = zero
        prev = pivot
    det = a[n - 1][n - 1]
    return det if sign == 1 else -det


def rref(matrix: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    a = [[Fraction(v) for v in row] for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        lead = a[r][c]
        a[r] = [v / lead for v in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [vi - f * vr for vi, vr in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(matrix: Sequence[Sequence[Fraction]]) -> int:
    return len(rref(matrix)[1]) if matrix else 0


def nullspace(matrix: Sequence[Sequence[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of {v : matrix v = 0}, one vector per free column."""
    if not matrix:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    reduced, pivots = rref(matrix)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(reduced, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis
