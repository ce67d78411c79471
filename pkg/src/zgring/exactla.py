"""Exact integer linear algebra: fraction-free elimination and solving.

Determinants use one-step Bareiss elimination, which keeps every
intermediate value an integer (each is a minor of the input matrix), so
results are exact at any magnitude.
"""

from __future__ import annotations

from fractions import Fraction


def _eliminate(m: list[list[int]], n: int) -> int:
    """Fraction-free forward elimination in place; returns the determinant.

    ``m`` may carry extra columns beyond the first n; they are swept along
    like right-hand sides.  Returns 0 for singular input (the matrix is
    then left partially reduced).
    """
    sign = 1
    prev = 1
    width = len(m[0]) if m else 0
    for k in range(n - 1):
        piv = k
        while piv < n and m[piv][k] == 0:
            piv += 1
        if piv == n:
            return 0
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        pkk = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            mik = row_i[k]
            for j in range(k + 1, width):
                row_i[j] = (row_i[j] * pkk - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pkk
    return sign * m[n - 1][n - 1]


def bareiss_determinant(rows) -> int:
    """Exact determinant of a square integer matrix."""
    n = len(rows)
    if n == 0:
        return 1
    return _eliminate([list(r) for r in rows], n)


def solve_exact(rows, rhs) -> tuple[int, list[Fraction] | None]:
    """Solve A x = rhs exactly; returns (det A, x) with x None when singular."""
    n = len(rows)
    if n == 0:
        return 1, []
    aug = [list(rows[i]) + [rhs[i]] for i in range(n)]
    det = _eliminate(aug, n)
    if det == 0:
        return 0, None
    x = [Fraction(0)] * n
    for i in reversed(range(n)):
        acc = Fraction(aug[i][n])
        for j in range(i + 1, n):
            acc -= aug[i][j] * x[j]
        x[i] = acc / aug[i][i]
    return det, x
