"""Numpy implementation of the split-scan kernel.

Used when the compiled extension is unavailable. Arithmetic is arranged
exactly like the compiled loop (same operations, same order) so both
backends pick the same split on the same input.
"""

import numpy as np


def split_scan(values, labels, n_classes, min_leaf):
    """Best binary-split position for one presorted feature column.

    values : float64[n], ascending
    labels : int64[n], class ids aligned with values
    Returns (pos, score): split puts rows [0, pos) left and [pos, n) right.
    score is the class-impurity mass i*gini_left + (n-i)*gini_right, lower
    is better; pos == -1 when no legal split exists.
    """
    n = values.shape[0]
    if n < 2 * min_leaf:
        return -1, np.inf
    onehot = np.zeros((n, n_classes), dtype=np.int64)
    onehot[np.arange(n), labels] = 1
    cum = np.cumsum(onehot, axis=0)
    left = cum[:-1]
    total = cum[-1]
    right = total[None, :] - left
    sl = np.einsum("ij,ij->i", left, left).astype(np.float64)
    sr = np.einsum("ij,ij->i", right, right).astype(np.float64)
    sizes_l = np.arange(1, n, dtype=np.float64)
    sizes_r = np.float64(n) - sizes_l
    score = (sizes_l - sl / sizes_l) + (sizes_r - sr / sizes_r)
    legal = values[1:] != values[:-1]
    if min_leaf > 1:
        legal &= (sizes_l >= min_leaf) & (sizes_r >= min_leaf)
    if not legal.any():
        return -1, np.inf
    score = np.where(legal, score, np.inf)
    pos = int(np.argmin(score))
    return pos + 1, float(score[pos])
