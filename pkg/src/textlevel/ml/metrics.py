"""Classification metrics computed from scratch.

Everything here works off a confusion matrix or raw score columns; no
external metric library. Per-class values use the one-vs-rest reduction
and aggregate by support weighting.
"""

import math

import numpy as np


def confusion_matrix(y_true, y_pred, classes):
    """Rows are true classes, columns predicted, in `classes` order."""
    index = {c: i for i, c in enumerate(classes)}
    mat = [[0] * len(classes) for _ in classes]
    for t, p in zip(y_true, y_pred):
        mat[index[t]][index[p]] += 1
    return mat


def _binary_mcc(tp, fp, fn, tn):
    num = tp * tn - fp * fn
    den = math.sqrt(
        float(tp + fp) * float(tp + fn) * float(tn + fp) * float(tn + fn)
    )
    if den == 0.0:
        return 0.0
    return num / den


def metrics_from_confusion(matrix, classes):
    """Per-class precision/recall/F1/MCC plus support-weighted averages.

    Zero denominators yield 0 for the affected statistic rather than an
    error, so empty predicted or true classes stay well-defined.
    """
    mat = np.asarray(matrix, dtype=np.int64)
    total = int(mat.sum())
    per_class = {}
    for i, cls in enumerate(classes):
        tp = int(mat[i, i])
        fn = int(mat[i].sum()) - tp
        fp = int(mat[:, i].sum()) - tp
        tn = total - tp - fn - fp
        precision = tp / (tp + fp) if tp + fp else 0.0
        recall = tp / (tp + fn) if tp + fn else 0.0
        if precision + recall:
            f1 = 2.0 * precision * recall / (precision + recall)
        else:
            f1 = 0.0
        per_class[cls] = {
            "precision": precision,
            "recall": recall,
            "f1": f1,
            "mcc": _binary_mcc(tp, fp, fn, tn),
            "support": tp + fn,
        }
    supports = np.array([per_class[c]["support"] for c in classes], dtype=np.float64)
    weight_total = supports.sum()
    averaged = {}
    for key in ("precision", "recall", "f1", "mcc"):
        values = np.array([per_class[c][key] for c in classes])
        if weight_total:
            averaged[key] = float((values * supports).sum() / weight_total)
        else:
            averaged[key] = 0.0
    accuracy = float(np.trace(mat)) / total if total else 0.0
    return {
        "accuracy": accuracy,
        "per_class": per_class,
        "weighted": averaged,
    }


def _auc_binary(scores, positives):
    """Rank-sum AUC; tied scores get the average of their rank range."""
    scores = np.asarray(scores, dtype=np.float64)
    positives = np.asarray(positives, dtype=bool)
    n_pos = int(positives.sum())
    n_neg = positives.size - n_pos
    if n_pos == 0 or n_neg == 0:
        return None
    order = np.argsort(scores, kind="stable")
    ranks = np.empty(scores.size, dtype=np.float64)
    sorted_scores = scores[order]
    i = 0
    while i < scores.size:
        j = i
        while j + 1 < scores.size and sorted_scores[j + 1] == sorted_scores[i]:
            j += 1
        ranks[order[i:j + 1]] = 0.5 * (i + j) + 1.0
        i = j + 1
    rank_sum = float(ranks[positives].sum())
    return (rank_sum - n_pos * (n_pos + 1) / 2.0) / (n_pos * n_neg)


def roc_auc_ovr(y_true, scores, classes):
    """Support-weighted mean of per-class one-vs-rest AUCs.

    `scores` is an (n, L) array whose columns follow `classes`. Classes
    with no positive or no negative instances are skipped; if nothing is
    scorable the result is None.
    """
    scores = np.asarray(scores, dtype=np.float64)
    y_arr = list(y_true)
    weighted_sum = 0.0
    weight = 0
    per_class = {}
    for i, cls in enumerate(classes):
        positives = np.array([t == cls for t in y_arr])
        auc = _auc_binary(scores[:, i], positives)
        per_class[cls] = auc
        if auc is not None:
            support = int(positives.sum())
            weighted_sum += auc * support
            weight += support
    overall = weighted_sum / weight if weight else None
    return overall, per_class
