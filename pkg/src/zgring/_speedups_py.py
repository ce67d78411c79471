"""Pure-Python twins of the compiled kernels.

Same results as zgring._speedups on any input, with arbitrary-precision
integers throughout.  Selected automatically when the extension is not
built (or when ZGRING_PURE is set).
"""

from __future__ import annotations

from itertools import product as _iterproduct

from .exactla import bareiss_determinant


def convolve(table, a, b) -> list[int]:
    """Group-ring product of two coefficient vectors over a Cayley table."""
    n = len(a)
    out = [0] * n
    for i in range(n):
        ai = a[i]
        if ai:
            row = table[i]
            for j in range(n):
                bj = b[j]
                if bj:
                    out[row[j]] += ai * bj
    return out


def determinant(rows) -> int:
    return bareiss_determinant(rows)


def search_box(table, bound: int) -> list[tuple[int, ...]]:
    """Augmentation-one vectors in [-bound, bound]^n whose left-multiplication
    matrix has determinant +-1, in lexicographic order."""
    n = len(table)
    found = []
    span = range(-bound, bound + 1)
    for prefix in _iterproduct(span, repeat=n - 1):
        last = 1 - sum(prefix)
        if last < -bound or last > bound:
            continue
        vec = prefix + (last,)
        mat = [[0] * n for _ in range(n)]
        for i in range(n):
            ci = vec[i]
            if ci:
                row = table[i]
                for j in range(n):
                    mat[row[j]][j] = ci
        if bareiss_determinant(mat) in (1, -1):
            found.append(vec)
    return found
