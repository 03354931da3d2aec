# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled split-scan kernel for the decision-tree learners.

Mirrors kernels/pure.py operation for operation; both must choose the
same split position and score bit for bit.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def split_scan(cnp.float64_t[::1] values, cnp.int64_t[::1] labels,
               int n_classes, int min_leaf):
    cdef Py_ssize_t n = values.shape[0]
    if n < 2 * min_leaf:
        return -1, np.inf

    cdef cnp.int64_t[::1] count_l = np.zeros(n_classes, dtype=np.int64)
    cdef cnp.int64_t[::1] count_r = np.zeros(n_classes, dtype=np.int64)
    cdef Py_ssize_t i, y
    cdef double sl = 0.0, sr = 0.0
    cdef double best = np.inf
    cdef Py_ssize_t best_pos = -1
    cdef double size_l, size_r, score

    for i in range(n):
        count_r[labels[i]] += 1
    for i in range(n_classes):
        sr += <double>(count_r[i]) * <double>(count_r[i])

    for i in range(1, n):
        y = labels[i - 1]
        # move row i-1 from the right partition to the left
        sl += 2.0 * <double>count_l[y] + 1.0
        sr -= 2.0 * <double>count_r[y] - 1.0
        count_l[y] += 1
        count_r[y] -= 1
        if values[i] == values[i - 1]:
            continue
        if i < min_leaf or n - i < min_leaf:
            continue
        size_l = <double>i
        size_r = <double>(n - i)
        score = (size_l - sl / size_l) + (size_r - sr / size_r)
        if score < best:
            best = score
            best_pos = i

    if best_pos == -1:
        return -1, np.inf
    return best_pos, best
