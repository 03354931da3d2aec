"""Classifier registry, training entry points, and model persistence.

Six learners share one interface: fit(X, y, seed), predict(X),
predict_scores(X) returning one probability-like row per instance that
sums to 1, classes_ in sorted label order, and to_state/from_state for
JSON round-trips that reproduce predictions bit for bit.
"""

import inspect
import json
import time

import numpy as np

from .models import LogisticRegression, MLPClassifier
from .tree import DecisionTree
from .ensembles import AdaBoostClassifier, BaggingClassifier, RandomForest
from .crossval import cross_validate, stratified_folds, CrossValError
from .metrics import confusion_matrix, metrics_from_confusion, roc_auc_ovr

__all__ = [
    "ALGORITHMS", "ConstantModel", "build_model", "train_model",
    "save_model", "load_model", "ensure_row_width", "measure_training_time",
    "cross_validate", "stratified_folds", "CrossValError",
    "confusion_matrix", "metrics_from_confusion", "roc_auc_ovr",
    "MODEL_FORMAT_VERSION",
]

MODEL_FORMAT_VERSION = 1

ALGORITHMS = {
    "logreg": LogisticRegression,
    "tree": DecisionTree,
    "forest": RandomForest,
    "bagging": BaggingClassifier,
    "adaboost": AdaBoostClassifier,
    "mlp": MLPClassifier,
}


class ConstantModel:
    """Predicts one label regardless of input.

    Produced when training data carries a single class; kept so the rest
    of the pipeline (scoring, persistence) needs no special cases.
    """

    name = "constant"

    def __init__(self, label=None):
        self.label = label
        self.classes_ = [label] if label is not None else None

    def fit(self, X, y, seed=0):
        self.label = sorted(set(y))[0]
        self.classes_ = [self.label]
        return self

    def predict_scores(self, X):
        X = np.asarray(X, dtype=np.float64)
        return np.ones((X.shape[0], 1), dtype=np.float64)

    def predict(self, X):
        X = np.asarray(X, dtype=np.float64)
        return [self.label] * X.shape[0]

    def to_state(self):
        return {"label": self.label}

    @classmethod
    def from_state(cls, state):
        return cls(state["label"])


def build_model(algorithm, hyperparams=None):
    """Instantiate a registered learner, rejecting unknown settings."""
    if algorithm not in ALGORITHMS:
        raise ValueError(
            "unknown algorithm %r (choose from %s)"
            % (algorithm, ", ".join(sorted(ALGORITHMS))))
    cls = ALGORITHMS[algorithm]
    params = dict(hyperparams or {})
    allowed = set(inspect.signature(cls.__init__).parameters) - {"self"}
    unknown = sorted(set(params) - allowed)
    if unknown:
        raise ValueError(
            "algorithm %s does not accept: %s" % (algorithm, ", ".join(unknown)))
    return cls(**params)


def train_model(algorithm, X, y, seed=0, hyperparams=None):
    """Train one learner; returns (model, training_seconds, warnings).

    A single-class dataset degrades to a constant predictor with a
    warning instead of failing.
    """
    X = np.asarray(X, dtype=np.float64)
    y = list(y)
    warnings = []
    if len(set(y)) < 2:
        warnings.append(
            "training data has a single class %r; trained a constant model"
            % y[0])
        model = ConstantModel()
    else:
        model = build_model(algorithm, hyperparams)
    start = time.perf_counter()
    model.fit(X, y, seed=seed)
    seconds = time.perf_counter() - start
    if getattr(model, "constant_label", None) is not None:
        warnings.append(
            "boosting could not beat random guessing on round 1; "
            "model is a constant predictor of %r" % model.constant_label)
    return model, seconds, warnings


def save_model(path, model, *, algorithm, seed, hyperparams, feature_names,
               catalog_fingerprint, standardization, imputation_means,
               profiles, training_seconds, classes):
    payload = {
        "format_version": MODEL_FORMAT_VERSION,
        "algorithm": algorithm,
        "model_kind": model.name,
        "hyperparams": dict(hyperparams or {}),
        "seed": seed,
        "classes": list(classes),
        "feature_names": list(feature_names),
        "catalog_fingerprint": catalog_fingerprint,
        "standardization": standardization,
        "imputation_means": imputation_means,
        "profiles": profiles,
        "training_seconds": training_seconds,
        "state": model.to_state(),
    }
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(payload, handle, sort_keys=True, indent=1)
        handle.write("\n")
    return payload


def load_model(path):
    """Read a saved model; returns (model, payload)."""
    with open(path, "r", encoding="utf-8") as handle:
        payload = json.load(handle)
    version = payload.get("format_version")
    if version != MODEL_FORMAT_VERSION:
        raise ValueError(
            "model file %s has format version %r; this build reads %d"
            % (path, version, MODEL_FORMAT_VERSION))
    kind = payload.get("model_kind", payload["algorithm"])
    if kind == "constant":
        model = ConstantModel.from_state(payload["state"])
    else:
        model = ALGORITHMS[kind].from_state(payload["state"])
    return model, payload


def ensure_row_width(payload, X):
    X = np.asarray(X, dtype=np.float64)
    expected = len(payload["feature_names"])
    if X.ndim != 2 or X.shape[1] != expected:
        got = X.shape[1] if X.ndim == 2 else X.ndim
        raise ValueError(
            "row width %s does not match the %d-column catalog this model "
            "was trained on (fingerprint %s)"
            % (got, expected, payload["catalog_fingerprint"]))
    return X


def measure_training_time(algorithm, X, y, feature_counts, ranked_names,
                          feature_names, seed=0, hyperparams=None):
    """Wall-clock fit seconds per top-k feature subset, one fit each.

    Subsets are nested: top-k columns follow `ranked_names` order, so the
    k=10 subset is contained in the k=20 one.
    """
    X = np.asarray(X, dtype=np.float64)
    index = {name: i for i, name in enumerate(feature_names)}
    missing = [name for name in ranked_names if name not in index]
    if missing:
        raise ValueError("ranked features not in the matrix: %s"
                         % ", ".join(missing[:5]))
    table = []
    for k in feature_counts:
        if k < 1 or k > len(ranked_names):
            raise ValueError(
                "feature count %d outside the ranking (1..%d)"
                % (k, len(ranked_names)))
        cols = [index[name] for name in ranked_names[:k]]
        _, seconds, _ = train_model(
            algorithm, X[:, cols], y, seed=seed, hyperparams=hyperparams)
        table.append({"features": k, "seconds": seconds})
    return table
