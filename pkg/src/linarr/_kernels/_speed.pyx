# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of _ref.py. Same signatures, same arithmetic, same results."""
import math

import numpy as np

cimport numpy as cnp

cnp.import_array()


def distribution_from_table(const signed char[:, ::1] table, rows, long long dmax):
    cdef cnp.int64_t[::1] idx = np.ascontiguousarray(rows, dtype=np.int64)
    cdef Py_ssize_t m = idx.shape[0]
    cdef Py_ssize_t nperm = table.shape[1]
    out_arr = np.zeros(dmax + 1, dtype=np.int64)
    cdef cnp.int64_t[::1] out = out_arr
    if m == 0:
        out[0] = nperm
        return out_arr
    acc_arr = np.zeros(nperm, dtype=np.int32)
    cdef cnp.int32_t[::1] acc = acc_arr
    cdef Py_ssize_t e, j
    cdef const signed char* row
    for e in range(m):
        row = &table[idx[e], 0]
        for j in range(nperm):
            acc[j] += row[j]
    for j in range(nperm):
        out[acc[j]] += 1
    return out_arr


def stream_distribution(int n, eu, ev):
    cdef cnp.int64_t[::1] u = np.ascontiguousarray(eu, dtype=np.int64)
    cdef cnp.int64_t[::1] v = np.ascontiguousarray(ev, dtype=np.int64)
    cdef Py_ssize_t m = u.shape[0]
    cdef long long dmax = m * max(n - 1, 0)
    out_arr = np.zeros(dmax + 1, dtype=np.int64)
    cdef cnp.int64_t[::1] out = out_arr
    if n == 0 or m == 0:
        out[0] = math.factorial(n)
        return out_arr
    # lexicographic next-permutation walk over pos[0..n-1]
    cdef int pos[32]
    cdef int i, j, tmp, k, lo, hi
    cdef long long d
    if n > 32:
        raise ValueError("stream enumeration capped at n = 32")
    for i in range(n):
        pos[i] = i
    while True:
        d = 0
        for k in range(m):
            tmp = pos[u[k]] - pos[v[k]]
            d += tmp if tmp >= 0 else -tmp
        out[d] += 1
        # advance; standard lexicographic successor
        i = n - 2
        while i >= 0 and pos[i] >= pos[i + 1]:
            i -= 1
        if i < 0:
            break
        j = n - 1
        while pos[j] <= pos[i]:
            j -= 1
        tmp = pos[i]; pos[i] = pos[j]; pos[j] = tmp
        lo = i + 1; hi = n - 1
        while lo < hi:
            tmp = pos[lo]; pos[lo] = pos[hi]; pos[hi] = tmp
            lo += 1; hi -= 1
    return out_arr


def gnm_prefix_variances(int n, pu, pv):
    cdef cnp.int64_t[::1] u = np.ascontiguousarray(pu, dtype=np.int64)
    cdef cnp.int64_t[::1] v = np.ascontiguousarray(pv, dtype=np.int64)
    cdef Py_ssize_t M = u.shape[0]
    out_arr = np.zeros(M + 1, dtype=np.float64)
    cdef double[::1] out = out_arr
    deg_arr = np.zeros(n, dtype=np.int64)
    cdef cnp.int64_t[::1] deg = deg_arr
    cdef long long sk2 = 0, num, m
    cdef Py_ssize_t t
    cdef long long a, b
    for t in range(M):
        a = u[t]; b = v[t]
        sk2 += 2 * deg[a] + 2 * deg[b] + 2
        deg[a] += 1
        deg[b] += 1
        m = t + 1
        num = 4 * m * (2 * (n - 1) - m) + (n - 4) * sk2
        out[m] = <double>(n + 1) * <double>num / 180.0
    return out_arr


def tree_draws_d(codes, perms):
    cdef cnp.int64_t[:, ::1] c = np.ascontiguousarray(codes, dtype=np.int64)
    cdef cnp.int64_t[:, ::1] p = np.ascontiguousarray(perms, dtype=np.int64)
    cdef Py_ssize_t T = p.shape[0]
    cdef int n = <int>p.shape[1]
    out_arr = np.empty(T, dtype=np.int64)
    cdef cnp.int64_t[::1] out = out_arr
    deg_arr = np.empty(n, dtype=np.int64)
    cdef cnp.int64_t[::1] deg = deg_arr
    cdef Py_ssize_t i, k
    cdef int ptr, leaf, x
    cdef long long total, diff
    for i in range(T):
        for k in range(n):
            deg[k] = 1
        for k in range(n - 2):
            deg[c[i, k]] += 1
        ptr = 0
        while deg[ptr] != 1:
            ptr += 1
        leaf = ptr
        total = 0
        for k in range(n - 2):
            x = <int>c[i, k]
            diff = p[i, leaf] - p[i, x]
            total += diff if diff >= 0 else -diff
            deg[x] -= 1
            if deg[x] == 1 and x < ptr:
                leaf = x
            else:
                ptr += 1
                while deg[ptr] != 1:
                    ptr += 1
                leaf = ptr
        diff = p[i, leaf] - p[i, n - 1]
        out[i] = total + (diff if diff >= 0 else -diff)
    return out_arr


def arrangements_d(eu, ev, perms):
    cdef cnp.int64_t[::1] u = np.ascontiguousarray(eu, dtype=np.int64)
    cdef cnp.int64_t[::1] v = np.ascontiguousarray(ev, dtype=np.int64)
    cdef cnp.int64_t[:, ::1] p = np.ascontiguousarray(perms, dtype=np.int64)
    cdef Py_ssize_t R = p.shape[0]
    cdef Py_ssize_t m = u.shape[0]
    out_arr = np.zeros(R, dtype=np.int64)
    cdef cnp.int64_t[::1] out = out_arr
    cdef Py_ssize_t i, k
    cdef long long d, diff
    for i in range(R):
        d = 0
        for k in range(m):
            diff = p[i, u[k]] - p[i, v[k]]
            d += diff if diff >= 0 else -diff
        out[i] = d
    return out_arr
