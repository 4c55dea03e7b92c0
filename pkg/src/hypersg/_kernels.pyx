# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops. Signatures mirror ``_pure``."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int32_t, uint64_t

cnp.import_array()

cdef extern from *:
    int __builtin_ctzll(unsigned long long x) nogil


def find_nonassociative(const int32_t[:, ::1] table):
    cdef Py_ssize_t n = table.shape[0]
    cdef Py_ssize_t i, j, k
    cdef int32_t ij
    with nogil:
        for i in range(n):
            for j in range(n):
                ij = table[i, j]
                for k in range(n):
                    if table[ij, k] != table[i, table[j, k]]:
                        with gil:
                            return (i, j, k)
    return None


def sampled_nonassociative(const int32_t[:, ::1] table, const int32_t[:, ::1] triples):
    cdef Py_ssize_t m = triples.shape[0]
    cdef Py_ssize_t t
    cdef int32_t i, j, k
    for t in range(m):
        i = triples[t, 0]
        j = triples[t, 1]
        k = triples[t, 2]
        if table[table[i, j], k] != table[i, table[j, k]]:
            return (int(i), int(j), int(k))
    return None


def power_table(const int32_t[:, ::1] group):
    cdef Py_ssize_t n = group.shape[0]
    if n > 62:
        raise ValueError("power_table supports groups of order <= 62")
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n
    trans_arr = np.zeros((n, size), dtype=np.uint64)
    out_arr = np.empty((size - 1, size - 1), dtype=np.int32)
    cdef uint64_t[:, ::1] trans = trans_arr
    cdef int32_t[:, ::1] out = out_arr
    cdef Py_ssize_t a, m, low, rest, b
    with nogil:
        for a in range(n):
            for m in range(1, size):
                low = m & (-m)
                b = __builtin_ctzll(<unsigned long long>low)
                trans[a, m] = trans[a, m ^ low] | ((<uint64_t>1) << group[a, b])
        for m in range(1, size):
            low = m & (-m)
            a = __builtin_ctzll(<unsigned long long>low)
            rest = m ^ low
            if rest == 0:
                for b in range(1, size):
                    out[m - 1, b - 1] = <int32_t>(trans[a, b] - 1)
            else:
                for b in range(1, size):
                    out[m - 1, b - 1] = <int32_t>(((<uint64_t>out[rest - 1, b - 1] + 1) | trans[a, b]) - 1)
    return out_arr


def find_nonhomomorphic(const int32_t[:, ::1] src, const int32_t[:, ::1] dst,
                        const int32_t[::1] mapping):
    cdef Py_ssize_t n = src.shape[0]
    cdef Py_ssize_t i, j
    with nogil:
        for i in range(n):
            for j in range(n):
                if mapping[src[i, j]] != dst[mapping[i], mapping[j]]:
                    with gil:
                        return (i, j)
    return None
