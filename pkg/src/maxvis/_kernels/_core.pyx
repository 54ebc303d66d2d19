# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled float-mode kernels: (max, +) matmul, Floyd-Warshall closure
and the Karp cycle-mean table, all on log-domain float64 arrays with
-inf as the max-times zero.  Must match _fallback.py exactly."""

import numpy as np

from libc.math cimport INFINITY


def maxplus_matmul(double[:, ::1] a, double[:, ::1] b):
    cdef Py_ssize_t n = a.shape[0]
    out_arr = np.full((n, n), -INFINITY)
    cdef double[:, ::1] out = out_arr
    cdef Py_ssize_t i, j, k
    cdef double aik, cand
    with nogil:
        for i in range(n):
            for k in range(n):
                aik = a[i, k]
                if aik == -INFINITY:
                    continue
                for j in range(n):
                    cand = aik + b[k, j]
                    if cand > out[i, j]:
                        out[i, j] = cand
    return out_arr


def fw_closure(d_arr):
    cdef double[:, ::1] d = d_arr
    cdef Py_ssize_t n = d.shape[0]
    cdef Py_ssize_t i, j, k
    cdef double dik, cand
    with nogil:
        for k in range(n):
            for i in range(n):
                dik = d[i, k]
                if dik == -INFINITY:
                    continue
                for j in range(n):
                    cand = dik + d[k, j]
                    if cand > d[i, j]:
                        d[i, j] = cand
    return d_arr


def karp_lambda(a_arr):
    cdef double[:, ::1] a = a_arr
    cdef Py_ssize_t m = a.shape[0]
    if m == 1:
        return float(a[0, 0])
    table_arr = np.full((m + 1, m), -INFINITY)
    cdef double[:, ::1] table = table_arr
    cdef Py_ssize_t k, u, v
    cdef double w, cand, val, worst, best
    table[0, 0] = 0.0
    with nogil:
        for k in range(1, m + 1):
            for u in range(m):
                w = table[k - 1, u]
                if w == -INFINITY:
                    continue
                for v in range(m):
                    cand = w + a[u, v]
                    if cand > table[k, v]:
                        table[k, v] = cand
        best = -INFINITY
        for v in range(m):
            if table[m, v] == -INFINITY:
                continue
            worst = INFINITY
            for k in range(m):
                if table[k, v] == -INFINITY:
                    continue
                val = (table[m, v] - table[k, v]) / (m - k)
                if val < worst:
                    worst = val
            if worst < INFINITY and worst > best:
                best = worst
    return float(best)
