# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled counting and enumeration kernels; see ``_kernels_py`` for the contract."""

import numpy as np

cimport numpy as cnp

cnp.import_array()


cdef inline long long _abs(long long x) noexcept nogil:
    return -x if x < 0 else x


cdef inline long long _min_abs_sum(long long k, long long target) noexcept nogil:
    cdef long long t = _abs(target)
    if t >= k:
        return t
    return k + (k - t) % 2


def min_abs_sum(long long k, long long target):
    return _min_abs_sum(k, target)


cdef long long _count(int i, int d, long long budget, long long s) noexcept nogil:
    cdef long long last, v, b2, lim, total = 0
    cdef int rest
    if i == d - 1:
        last = d - s
        return 1 if (last != 0 and _abs(last) <= budget) else 0
    rest = d - 1 - i
    lim = budget - rest
    v = -lim
    while v <= lim:
        if v != 0:
            b2 = budget - _abs(v)
            if _min_abs_sum(rest, d - s - v) <= b2:
                total += _count(i + 1, d, b2, s + v)
        v += 1
    return total


cdef void _fill(int i, int d, long long budget, long long s,
                int* c, int[:, ::1] out, Py_ssize_t* row) noexcept nogil:
    cdef long long last, v, b2, lim
    cdef int rest, j
    if i == d - 1:
        last = d - s
        if last != 0 and _abs(last) <= budget:
            c[i] = <int>last
            for j in range(d):
                out[row[0], j] = c[j]
            row[0] += 1
        return
    rest = d - 1 - i
    lim = budget - rest
    v = -lim
    while v <= lim:
        if v != 0:
            b2 = budget - _abs(v)
            if _min_abs_sum(rest, d - s - v) <= b2:
                c[i] = <int>v
                _fill(i + 1, d, b2, s + v, c, out, row)
        v += 1


def count_slice(int d, long long m):
    if d < 1 or m < 0:
        return 0
    cdef long long n
    with nogil:
        n = _count(0, d, m, 0)
    return n


def enumerate_slice(int d, long long m):
    cdef long long n = count_slice(d, m)
    out = np.empty((n, max(d, 0)), dtype=np.int32)
    if n == 0:
        return out
    cdef int[:, ::1] view = out
    cdef int[64] c
    cdef Py_ssize_t row = 0
    if d > 64:
        raise ValueError("d > 64 is not supported by the compiled kernel")
    with nogil:
        _fill(0, d, m, 0, c, view, &row)
    return out


cdef long long _comp(long long left, long long parts) noexcept nogil:
    cdef long long a, total = 0
    if parts == 1:
        return 1 if left >= 1 else 0
    a = 1
    while a <= left - parts + 1:
        total += _comp(left - a, parts - 1)
        a += 1
    return total


def count_compositions(long long m, long long p):
    if p < 1 or m < p:
        return 0
    cdef long long n
    with nogil:
        n = _comp(m, p)
    return n
