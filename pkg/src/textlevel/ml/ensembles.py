"""Tree ensembles: random forest, bagging, and SAMME boosting.

Per-member seeds are spawned from the master seed so ensembles are
reproducible and members are independent.
"""

import math

import numpy as np

from .tree import DecisionTree


def _member_rngs(seed, count):
    seq = np.random.SeedSequence(seed)
    return [np.random.default_rng(child) for child in seq.spawn(count)]


class RandomForest:
    """Bootstrapped CART trees voting with a sqrt(D) feature subset per
    split. With bootstrap off, one tree, and no subsetting this reduces
    to a single DecisionTree."""

    name = "forest"

    def __init__(self, n_trees=100, max_depth=None, min_leaf=1,
                 max_features="sqrt", bootstrap=True):
        self.n_trees = n_trees
        self.max_depth = max_depth
        self.min_leaf = min_leaf
        self.max_features = max_features
        self.bootstrap = bootstrap
        self.classes_ = None
        self.trees = []

    def _resolve_features(self, n_features):
        if self.max_features == "sqrt":
            return max(1, int(math.isqrt(n_features)))
        return self.max_features

    def fit(self, X, y, seed=0):
        X = np.asarray(X, dtype=np.float64)
        y = list(y)
        self.classes_ = sorted(set(y))
        n = X.shape[0]
        max_feats = self._resolve_features(X.shape[1])
        self.trees = []
        rngs = _member_rngs(seed, self.n_trees)
        y_arr = np.array(y)
        for rng in rngs:
            if self.bootstrap:
                rows = rng.integers(0, n, size=n)
            else:
                rows = np.arange(n)
            tree = DecisionTree(
                max_depth=self.max_depth,
                min_leaf=self.min_leaf,
                max_features=max_feats,
            )
            # reuse the member rng for split-level feature sampling
            tree.classes_ = self.classes_
            index = {c: i for i, c in enumerate(self.classes_)}
            codes = np.array([index[v] for v in y_arr[rows]], dtype=np.int64)
            tree.root = tree._grow(X[rows], codes, 0, len(self.classes_), rng)
            self.trees.append(tree)
        return self

    def predict_scores(self, X):
        X = np.asarray(X, dtype=np.float64)
        n_classes = len(self.classes_)
        votes = np.zeros((X.shape[0], n_classes), dtype=np.float64)
        for tree in self.trees:
            scores = tree.predict_scores(X)
            votes[np.arange(X.shape[0]), scores.argmax(axis=1)] += 1.0
        return votes / len(self.trees)

    def predict(self, X):
        scores = self.predict_scores(X)
        return [self.classes_[i] for i in scores.argmax(axis=1)]

    def to_state(self):
        return {
            "n_trees": self.n_trees,
            "max_depth": self.max_depth,
            "min_leaf": self.min_leaf,
            "max_features": self.max_features,
            "bootstrap": self.bootstrap,
            "classes": self.classes_,
            "trees": [t.root for t in self.trees],
        }

    @classmethod
    def from_state(cls, state):
        model = cls(
            n_trees=state["n_trees"],
            max_depth=state["max_depth"],
            min_leaf=state["min_leaf"],
            max_features=state["max_features"],
            bootstrap=state["bootstrap"],
        )
        model.classes_ = state["classes"]
        model.trees = []
        for root in state["trees"]:
            tree = DecisionTree()
            tree.classes_ = model.classes_
            tree.root = root
            model.trees.append(tree)
        return model


class BaggingClassifier:
    """Bootstrap aggregation of full CART trees with majority vote."""

    name = "bagging"

    def __init__(self, n_trees=50, max_depth=None, min_leaf=1):
        self.n_trees = n_trees
        self.max_depth = max_depth
        self.min_leaf = min_leaf
        self.classes_ = None
        self.trees = []

    def fit(self, X, y, seed=0):
        X = np.asarray(X, dtype=np.float64)
        y_arr = np.array(list(y))
        self.classes_ = sorted(set(y_arr.tolist()))
        n = X.shape[0]
        self.trees = []
        for rng in _member_rngs(seed, self.n_trees):
            rows = rng.integers(0, n, size=n)
            tree = DecisionTree(max_depth=self.max_depth, min_leaf=self.min_leaf)
            tree.fit(X[rows], y_arr[rows].tolist())
            self.trees.append(tree)
        return self

    def predict_scores(self, X):
        X = np.asarray(X, dtype=np.float64)
        n_classes = len(self.classes_)
        index = {c: i for i, c in enumerate(self.classes_)}
        votes = np.zeros((X.shape[0], n_classes), dtype=np.float64)
        for tree in self.trees:
            for row, label in enumerate(tree.predict(X)):
                votes[row, index[label]] += 1.0
        return votes / len(self.trees)

    def predict(self, X):
        scores = self.predict_scores(X)
        return [self.classes_[i] for i in scores.argmax(axis=1)]

    def to_state(self):
        return {
            "n_trees": self.n_trees,
            "max_depth": self.max_depth,
            "min_leaf": self.min_leaf,
            "classes": self.classes_,
            "trees": [{"classes": t.classes_, "root": t.root} for t in self.trees],
        }

    @classmethod
    def from_state(cls, state):
        model = cls(
            n_trees=state["n_trees"],
            max_depth=state["max_depth"],
            min_leaf=state["min_leaf"],
        )
        model.classes_ = state["classes"]
        model.trees = []
        for item in state["trees"]:
            tree = DecisionTree()
            tree.classes_ = item["classes"]
            tree.root = item["root"]
            model.trees.append(tree)
        return model


class AdaBoostClassifier:
    """Multiclass SAMME with shallow CART stumps.

    Instance weighting is realized by weighted resampling before each
    round; the weighted error itself is computed exactly on the full
    training set. A round at or past the (L-1)/L random-guess error ends
    training; if that happens on round one the model degrades to a
    flagged constant predictor of the majority class.
    """

    name = "adaboost"

    def __init__(self, n_rounds=100, max_depth=2, min_leaf=1):
        self.n_rounds = n_rounds
        self.max_depth = max_depth
        self.min_leaf = min_leaf
        self.classes_ = None
        self.members = []  # (tree, alpha)
        self.constant_label = None

    def fit(self, X, y, seed=0):
        X = np.asarray(X, dtype=np.float64)
        y_arr = np.array(list(y))
        self.classes_ = sorted(set(y_arr.tolist()))
        n = X.shape[0]
        n_classes = len(self.classes_)
        w = np.full(n, 1.0 / n, dtype=np.float64)
        self.members = []
        self.constant_label = None
        guess_error = (n_classes - 1) / n_classes
        for rng in _member_rngs(seed, self.n_rounds):
            rows = rng.choice(n, size=n, replace=True, p=w)
            tree = DecisionTree(max_depth=self.max_depth, min_leaf=self.min_leaf)
            tree.fit(X[rows], y_arr[rows].tolist())
            pred = np.array(tree.predict(X))
            miss = pred != y_arr
            err = float(w[miss].sum())
            if err >= guess_error:
                break
            err = max(err, 1e-12)
            alpha = math.log((1.0 - err) / err) + math.log(n_classes - 1.0)
            self.members.append((tree, alpha))
            w = w * np.exp(alpha * miss)
            w = w / w.sum()
            if err <= 1e-12:
                break
        if not self.members:
            # no round beat random guessing: flagged constant predictor
            counts = {}
            for label in y_arr.tolist():
                counts[label] = counts.get(label, 0) + 1
            self.constant_label = min(counts, key=lambda c: (-counts[c], c))
        return self

    def predict_scores(self, X):
        X = np.asarray(X, dtype=np.float64)
        agg = np.zeros((X.shape[0], len(self.classes_)), dtype=np.float64)
        if self.constant_label is not None:
            agg[:, self.classes_.index(self.constant_label)] = 1.0
            return agg
        index = {c: i for i, c in enumerate(self.classes_)}
        for tree, alpha in self.members:
            for row, label in enumerate(tree.predict(X)):
                agg[row, index[label]] += alpha
        totals = agg.sum(axis=1, keepdims=True)
        totals[totals == 0.0] = 1.0
        return agg / totals

    def predict(self, X):
        scores = self.predict_scores(X)
        return [self.classes_[i] for i in scores.argmax(axis=1)]

    def to_state(self):
        return {
            "n_rounds": self.n_rounds,
            "max_depth": self.max_depth,
            "min_leaf": self.min_leaf,
            "classes": self.classes_,
            "constant_label": self.constant_label,
            "members": [
                {"classes": t.classes_, "root": t.root, "alpha": a}
                for t, a in self.members
            ],
        }

    @classmethod
    def from_state(cls, state):
        model = cls(
            n_rounds=state["n_rounds"],
            max_depth=state["max_depth"],
            min_leaf=state["min_leaf"],
        )
        model.classes_ = state["classes"]
        model.constant_label = state.get("constant_label")
        model.members = []
        for item in state["members"]:
            tree = DecisionTree()
            tree.classes_ = item["classes"]
            tree.root = item["root"]
            model.members.append((tree, item["alpha"]))
        return model
