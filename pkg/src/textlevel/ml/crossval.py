"""Stratified k-fold cross-validation with fold-local preprocessing.

All preprocessing statistics (imputation means, standardization moments,
rank profiles) are computed on the training fold only and applied to the
held-out fold, so nothing about a test document leaks into the model
that scores it.
"""

import random

import numpy as np

from .metrics import confusion_matrix, metrics_from_confusion, roc_auc_ovr


class CrossValError(ValueError):
    pass


def stratified_folds(labels, n_folds, seed=0):
    """Deal each class's shuffled instances round-robin across folds.

    Returns (assignment, n_folds_used, warnings). The fold count is
    clamped to the smallest class size so every fold holds out at least
    one instance of every class.
    """
    labels = list(labels)
    by_class = {}
    for i, lab in enumerate(labels):
        by_class.setdefault(lab, []).append(i)
    min_count = min(len(v) for v in by_class.values())
    if min_count < 2:
        raise CrossValError(
            "smallest class has %d instance(s); need at least 2 for "
            "cross-validation" % min_count
        )
    warnings = []
    used = n_folds
    if min_count < n_folds:
        used = min_count
        warnings.append(
            "fold count reduced from %d to %d (smallest class size)"
            % (n_folds, used)
        )
    rng = random.Random(seed)
    assignment = [0] * len(labels)
    for lab in sorted(by_class):
        rows = list(by_class[lab])
        rng.shuffle(rows)
        for j, row in enumerate(rows):
            assignment[row] = j % used
    return assignment, used, warnings


def impute_columns(X, indicator_pairs, train_rows):
    """Fill masked entries with the training-fold mean of unmasked ones.

    `indicator_pairs` maps feature column index to its indicator column;
    indicator >= 0.5 marks the feature entry as absent. Columns that are
    absent in every training row fall back to 0.0. Returns the filled
    copy and the means used (for reuse on later data).
    """
    X = np.array(X, dtype=np.float64, copy=True)
    train_rows = np.asarray(train_rows, dtype=np.int64)
    means = {}
    for feat_col, ind_col in indicator_pairs.items():
        mask = X[:, ind_col] >= 0.5
        known = train_rows[~mask[train_rows]]
        mean = float(X[known, feat_col].mean()) if known.size else 0.0
        means[feat_col] = mean
        X[mask, feat_col] = mean
    return X, means


def standardize_params(X, train_rows):
    """Training-fold mean and deviation; constant columns get sigma 1."""
    sub = X[np.asarray(train_rows, dtype=np.int64)]
    mu = sub.mean(axis=0)
    sigma = sub.std(axis=0)
    sigma = np.where(sigma == 0.0, 1.0, sigma)
    return mu, sigma


def cross_validate(X, labels, model_factory, n_folds=10, seed=0,
                   indicator_pairs=None, column_hook=None):
    """Run stratified k-fold evaluation and pool the held-out results.

    model_factory() must return a fresh unfitted model exposing
    fit(X, y, seed)/predict/predict_scores/classes_. column_hook, when
    given, receives the training row indices and returns a mapping of
    column index to a full-length replacement column recomputed from
    training documents only (used for the rank-profile distance block,
    which would otherwise leak held-out counts).
    """
    X = np.asarray(X, dtype=np.float64)
    labels = list(labels)
    classes = sorted(set(labels))
    assignment, used, warnings = stratified_folds(labels, n_folds, seed)
    n = len(labels)
    pooled_scores = np.zeros((n, len(classes)), dtype=np.float64)
    y_pred_all = [None] * n
    fold_reports = []
    for fold in range(used):
        test_rows = [i for i in range(n) if assignment[i] == fold]
        train_rows = [i for i in range(n) if assignment[i] != fold]
        # fold-local feature rebuild, imputation, then standardization
        Xf = X
        if column_hook is not None:
            replacements = column_hook(train_rows)
            if replacements:
                Xf = np.array(Xf, copy=True)
                for col, values in replacements.items():
                    Xf[:, col] = values
        if indicator_pairs:
            Xf, _ = impute_columns(Xf, indicator_pairs, train_rows)
        mu, sigma = standardize_params(np.asarray(Xf, dtype=np.float64), train_rows)
        Xf = (np.asarray(Xf, dtype=np.float64) - mu) / sigma
        model = model_factory()
        model.fit(Xf[train_rows], [labels[i] for i in train_rows],
                  seed=seed * 1000003 + fold)
        scores = model.predict_scores(Xf[test_rows])
        preds = model.predict(Xf[test_rows])
        col_of = {c: j for j, c in enumerate(model.classes_)}
        for local, row in enumerate(test_rows):
            y_pred_all[row] = preds[local]
            for j, cls in enumerate(classes):
                if cls in col_of:
                    pooled_scores[row, j] = scores[local, col_of[cls]]
        fold_conf = confusion_matrix(
            [labels[i] for i in test_rows], preds, classes)
        fold_metrics = metrics_from_confusion(fold_conf, classes)
        fold_reports.append({
            "fold": fold,
            "test_size": len(test_rows),
            "accuracy": fold_metrics["accuracy"],
            "weighted_f1": fold_metrics["weighted"]["f1"],
        })
    conf = confusion_matrix(labels, y_pred_all, classes)
    overall = metrics_from_confusion(conf, classes)
    auc_overall, auc_per_class = roc_auc_ovr(labels, pooled_scores, classes)
    return {
        "classes": classes,
        "n_folds": used,
        "seed": seed,
        "confusion": conf,
        "accuracy": overall["accuracy"],
        "weighted": overall["weighted"],
        "per_class": overall["per_class"],
        "auc": auc_overall,
        "auc_per_class": auc_per_class,
        "folds": fold_reports,
        "warnings": warnings,
    }
