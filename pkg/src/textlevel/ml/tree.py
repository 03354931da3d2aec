"""CART decision tree on the shared split-scan kernel.

Splits minimize weighted Gini impurity. Node records store plain Python
types so trees serialize straight to JSON.
"""

import numpy as np

from ..kernels import split_scan


class DecisionTree:
    name = "tree"

    def __init__(self, max_depth=None, min_leaf=1, max_features=None):
        self.max_depth = max_depth
        self.min_leaf = min_leaf
        self.max_features = max_features
        self.classes_ = None
        self.root = None

    def _leaf(self, codes, n_classes):
        counts = np.bincount(codes, minlength=n_classes).astype(np.float64)
        return {"dist": (counts / counts.sum()).tolist()}

    def _candidate_features(self, n_features, rng):
        if self.max_features is None or self.max_features >= n_features:
            return np.arange(n_features)
        return rng.choice(n_features, size=self.max_features, replace=False)

    def _grow(self, X, codes, depth, n_classes, rng):
        n = X.shape[0]
        if (
            n < 2 * self.min_leaf
            or (self.max_depth is not None and depth >= self.max_depth)
            or np.all(codes == codes[0])
        ):
            return self._leaf(codes, n_classes)
        best = None
        for j in self._candidate_features(X.shape[1], rng):
            col = X[:, j]
            order = np.argsort(col, kind="stable")
            pos, score = split_scan(
                np.ascontiguousarray(col[order]),
                np.ascontiguousarray(codes[order]),
                n_classes,
                self.min_leaf,
            )
            if pos == -1:
                continue
            if best is None or score < best[0]:
                lo = col[order[pos - 1]]
                hi = col[order[pos]]
                threshold = (lo + hi) / 2.0
                if not lo < threshold:
                    threshold = hi
                best = (score, int(j), float(threshold))
        if best is None:
            return self._leaf(codes, n_classes)
        _, feat, threshold = best
        mask = X[:, feat] < threshold
        left = self._grow(X[mask], codes[mask], depth + 1, n_classes, rng)
        right = self._grow(X[~mask], codes[~mask], depth + 1, n_classes, rng)
        return {"feature": feat, "threshold": threshold, "left": left, "right": right}

    def fit(self, X, y, seed=0):
        X = np.asarray(X, dtype=np.float64)
        self.classes_ = sorted(set(np.asarray(y).tolist()))
        index = {c: i for i, c in enumerate(self.classes_)}
        codes = np.array([index[v] for v in y], dtype=np.int64)
        rng = np.random.default_rng(seed)
        self.root = self._grow(X, codes, 0, len(self.classes_), rng)
        return self

    def _score_row(self, row, node):
        while "dist" not in node:
            node = node["left"] if row[node["feature"]] < node["threshold"] else node["right"]
        return node["dist"]

    def predict_scores(self, X):
        X = np.asarray(X, dtype=np.float64)
        return np.array([self._score_row(row, self.root) for row in X])

    def predict(self, X):
        scores = self.predict_scores(X)
        return [self.classes_[i] for i in scores.argmax(axis=1)]

    def to_state(self):
        return {
            "max_depth": self.max_depth,
            "min_leaf": self.min_leaf,
            "max_features": self.max_features,
            "classes": self.classes_,
            "root": self.root,
        }

    @classmethod
    def from_state(cls, state):
        model = cls(
            max_depth=state["max_depth"],
            min_leaf=state["min_leaf"],
            max_features=state["max_features"],
        )
        model.classes_ = state["classes"]
        model.root = state["root"]
        return model
