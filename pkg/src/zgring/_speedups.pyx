# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the hot loops: group-ring convolution, small exact
determinants, and the bounded unit box search.

Callers guarantee (via the dispatch layer) that all intermediates fit in
64 bits; the pure-Python twin handles everything else.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

from array import array


def convolve_i64(object table_obj, object a_obj, object b_obj):
    cdef long long[::1] table = table_obj
    cdef long long[::1] a = a_obj
    cdef long long[::1] b = b_obj
    cdef Py_ssize_t n = a.shape[0]
    out_arr = array("q", bytes(8 * n))
    cdef long long[::1] out = out_arr
    cdef Py_ssize_t i, j
    cdef long long ai, bj
    with nogil:
        for i in range(n):
            ai = a[i]
            if ai != 0:
                for j in range(n):
                    bj = b[j]
                    if bj != 0:
                        out[table[i * n + j]] += ai * bj
    return tuple(out_arr)


cdef long long _bareiss(long long* m, Py_ssize_t n) noexcept nogil:
    cdef Py_ssize_t i, j, k, piv
    cdef long long prev = 1, pkk, mik, sign = 1, tmp
    for k in range(n - 1):
        piv = k
        while piv < n and m[piv * n + k] == 0:
            piv += 1
        if piv == n:
            return 0
        if piv != k:
            for j in range(n):
                tmp = m[k * n + j]
                m[k * n + j] = m[piv * n + j]
                m[piv * n + j] = tmp
            sign = -sign
        pkk = m[k * n + k]
        for i in range(k + 1, n):
            mik = m[i * n + k]
            for j in range(k + 1, n):
                m[i * n + j] = (m[i * n + j] * pkk - mik * m[k * n + j]) / prev
            m[i * n + k] = 0
        prev = pkk
    return sign * m[n * n - 1]


def bareiss_det_i64(object mat_obj, Py_ssize_t n):
    cdef long long[::1] mat = mat_obj
    cdef long long* work = <long long*> malloc(n * n * sizeof(long long))
    if work == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    cdef long long det
    with nogil:
        for i in range(n * n):
            work[i] = mat[i]
        det = _bareiss(work, n)
    free(work)
    return det


def search_box_i64(object table_obj, Py_ssize_t n, long long bound):
    cdef long long[::1] table = table_obj
    cdef Py_ssize_t ndig = n - 1 if n > 1 else 0
    cdef long long* digits = <long long*> malloc((ndig + 1) * sizeof(long long))
    cdef long long* vec = <long long*> malloc(n * sizeof(long long))
    cdef long long* mat = <long long*> malloc(n * n * sizeof(long long))
    cdef long long* work = <long long*> malloc(n * n * sizeof(long long))
    if digits == NULL or vec == NULL or mat == NULL or work == NULL:
        free(digits); free(vec); free(mat); free(work)
        raise MemoryError()
    cdef Py_ssize_t i, j, pos
    cdef long long s, last, ci, det
    cdef bint done = False
    found = []
    for i in range(ndig):
        digits[i] = -bound
    try:
        while not done:
            s = 0
            for i in range(ndig):
                s += digits[i]
            last = 1 - s
            if -bound <= last <= bound:
                for i in range(ndig):
                    vec[i] = digits[i]
                vec[n - 1] = last
                memset(mat, 0, n * n * sizeof(long long))
                for i in range(n):
                    ci = vec[i]
                    if ci != 0:
                        for j in range(n):
                            mat[table[i * n + j] * n + j] = ci
                for i in range(n * n):
                    work[i] = mat[i]
                det = _bareiss(work, n)
                if det == 1 or det == -1:
                    found.append(tuple([vec[i] for i in range(n)]))
            pos = ndig - 1
            while pos >= 0:
                if digits[pos] < bound:
                    digits[pos] += 1
                    break
                digits[pos] = -bound
                pos -= 1
            if pos < 0:
                done = True
    finally:
        free(digits); free(vec); free(mat); free(work)
    return found
