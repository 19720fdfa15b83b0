# cython: language_level=3
"""Compiled shortest-augmenting-path kernel for rectangular assignment.

Mirrors _sap_py.solve_dense; the inner column scans dominate runtime, so
they are typed C loops here.  Infeasible entries (inf) are skipped outright
rather than propagated through the reduced-cost arithmetic.
"""

from libc.math cimport INFINITY, isfinite
from libc.stdlib cimport free, malloc

import numpy as np


def solve_dense(const double[:, ::1] costs):
    """Return col4row (intp array, length n) or None when infeasible."""
    cdef Py_ssize_t n = costs.shape[0]
    cdef Py_ssize_t m = costs.shape[1]

    col4row_arr = np.full(n, -1, dtype=np.intp)
    cdef Py_ssize_t[::1] col4row = col4row_arr

    cdef double *u = <double *> malloc(n * sizeof(double))
    cdef double *v = <double *> malloc(m * sizeof(double))
    cdef double *shortest = <double *> malloc(m * sizeof(double))
    cdef Py_ssize_t *path = <Py_ssize_t *> malloc(m * sizeof(Py_ssize_t))
    cdef Py_ssize_t *row4col = <Py_ssize_t *> malloc(m * sizeof(Py_ssize_t))
    cdef Py_ssize_t *remaining = <Py_ssize_t *> malloc(m * sizeof(Py_ssize_t))
    cdef unsigned char *scanned_rows = <unsigned char *> malloc(n * sizeof(unsigned char))
    cdef unsigned char *scanned_cols = <unsigned char *> malloc(m * sizeof(unsigned char))

    if not (u and v and shortest and path and row4col and remaining
            and scanned_rows and scanned_cols):
        free(u); free(v); free(shortest); free(path)
        free(row4col); free(remaining); free(scanned_rows); free(scanned_cols)
        raise MemoryError()

    cdef Py_ssize_t cur_row, i, j, k, it, index, num_remaining, sink, tmp
    cdef double min_val, lowest, r
    cdef bint feasible = True

    for j in range(m):
        v[j] = 0.0
        row4col[j] = -1
    for i in range(n):
        u[i] = 0.0

    try:
        for cur_row in range(n):
            for j in range(m):
                shortest[j] = INFINITY
                remaining[j] = j
                scanned_cols[j] = 0
            for i in range(n):
                scanned_rows[i] = 0
            num_remaining = m
            min_val = 0.0
            i = cur_row
            sink = -1

            while sink == -1:
                scanned_rows[i] = 1
                index = -1
                lowest = INFINITY
                for it in range(num_remaining):
                    j = remaining[it]
                    r = costs[i, j]
                    if isfinite(r):
                        r = min_val + r - u[i] - v[j]
                        if r < shortest[j]:
                            path[j] = i
                            shortest[j] = r
                    if shortest[j] < lowest:
                        lowest = shortest[j]
                        index = it
                min_val = lowest
                if not isfinite(min_val):
                    feasible = False
                    break
                j = remaining[index]
                scanned_cols[j] = 1
                if row4col[j] == -1:
                    sink = j
                else:
                    i = row4col[j]
                num_remaining -= 1
                remaining[index] = remaining[num_remaining]

            if not feasible:
                return None

            u[cur_row] += min_val
            for k in range(n):
                if scanned_rows[k] and k != cur_row:
                    u[k] += min_val - shortest[col4row[k]]
            for j in range(m):
                if scanned_cols[j]:
                    v[j] += shortest[j] - min_val

            j = sink
            while True:
                i = path[j]
                row4col[j] = i
                tmp = col4row[i]
                col4row[i] = j
                j = tmp
                if i == cur_row:
                    break

        return col4row_arr
    finally:
        free(u); free(v); free(shortest); free(path)
        free(row4col); free(remaining); free(scanned_rows); free(scanned_cols)
