"""Kernel backend selection and overflow-safe dispatch.

The compiled extension is used whenever it is importable and the inputs
provably fit 64-bit arithmetic; everything else routes to the pure
Python twins, which are exact at any magnitude.  Set ZGRING_PURE=1 to
force the pure path (useful for benchmarking and debugging).
"""

from __future__ import annotations

import math
import os
from array import array

from . import _speedups_py as _pure

if os.environ.get("ZGRING_PURE"):
    _compiled = None
else:
    try:
        from . import _speedups as _compiled  # type: ignore[attr-defined]
    except ImportError:
        _compiled = None

HAVE_COMPILED = _compiled is not None
BACKEND = "compiled" if HAVE_COMPILED else "pure"

_I64_LIMIT = 1 << 62
_ENTRY_LIMIT = 1 << 30


def mul_coeffs(group, a, b) -> tuple[int, ...]:
    """Exact group-ring product of coefficient vectors over ``group``."""
    if _compiled is not None and group.order > 0:
        amax = max(map(abs, a), default=0)
        bmax = max(map(abs, b), default=0)
        if amax * bmax * group.order < _I64_LIMIT:
            return _compiled.convolve_i64(group.flat_table, array("q", a), array("q", b))
    return tuple(_pure.convolve(group.table, a, b))


def _det_bits(rows) -> float | None:
    """Bits of the Hadamard bound, or None if entries are too big to bother."""
    bits = 0.0
    for row in rows:
        s = 0
        for e in row:
            if e > _ENTRY_LIMIT or e < -_ENTRY_LIMIT:
                return None
            s += e * e
        if s == 0:
            return 0.0  # zero row: determinant is 0 either way
        bits += 0.5 * math.log2(s)
    return bits


def determinant(rows) -> int:
    """Exact determinant; compiled path only when intermediates provably fit."""
    n = len(rows)
    if _compiled is not None and n > 0:
        bits = _det_bits(rows)
        # Bareiss numerators are products of two minors, so double the bound.
        if bits is not None and 2.0 * bits + 2.0 < 62.0:
            flat = array("q", [e for row in rows for e in row])
            return _compiled.bareiss_det_i64(flat, n)
    return _pure.determinant(rows)


def _search_safe(n: int, bound: int) -> bool:
    bits = n * (0.5 * math.log2(n) + math.log2(max(bound, 1)))
    return 2.0 * bits + 2.0 < 62.0


def search_box(group, bound: int) -> list[tuple[int, ...]]:
    """Determinant-filtered augmentation-one box enumeration over a group."""
    n = group.order
    if _compiled is not None and n > 0 and _search_safe(n, bound):
        return _compiled.search_box_i64(group.flat_table, n, bound)
    return _pure.search_box(group.table, bound)
