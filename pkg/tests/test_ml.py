"""Learners, metrics, and the cross-validation loop.

Analytic gradients are checked against central finite differences;
metric identities against hand-worked confusion tables; AUC against a
brute-force pairwise count.
"""

import math

import numpy as np
import pytest

from textlevel import ml
from textlevel.ml.crossval import (
    CrossValError, cross_validate, impute_columns, standardize_params,
    stratified_folds)
from textlevel.ml.ensembles import (
    AdaBoostClassifier, BaggingClassifier, RandomForest, _member_rngs)
from textlevel.ml.metrics import (
    confusion_matrix, metrics_from_confusion, roc_auc_ovr)
from textlevel.ml.models import LogisticRegression, MLPClassifier
from textlevel.ml.tree import DecisionTree


def central_diff(f, arr, h=1e-6):
    """d f / d arr by symmetric perturbation, one entry at a time."""
    grad = np.zeros_like(arr)
    it = np.nditer(arr, flags=["multi_index"])
    for _ in it:
        idx = it.multi_index
        keep = arr[idx]
        arr[idx] = keep + h
        hi = f()
        arr[idx] = keep - h
        lo = f()
        arr[idx] = keep
        grad[idx] = (hi - lo) / (2.0 * h)
    return grad


class TestGradients:
    def test_logreg_matches_finite_differences(self):
        rng = np.random.default_rng(42)
        X = rng.normal(size=(5, 4))
        codes = np.array([0, 1, 2, 1, 0])
        W = rng.normal(scale=0.5, size=(4, 3))
        b = rng.normal(scale=0.5, size=3)
        model = LogisticRegression(l2=1e-4)
        _, gW, gb = model.loss_and_grad(X, codes, W, b)
        fdW = central_diff(lambda: model.loss_and_grad(X, codes, W, b)[0], W)
        fdb = central_diff(lambda: model.loss_and_grad(X, codes, W, b)[0], b)
        assert np.abs(gW - fdW).max() <= 1e-4
        assert np.abs(gb - fdb).max() <= 1e-4

    def test_mlp_matches_finite_differences(self):
        rng = np.random.default_rng(7)
        X = rng.normal(size=(6, 3))
        codes = np.array([0, 1, 0, 1, 0, 1])
        n_hidden = MLPClassifier.hidden_units(3, 2)
        W1 = rng.uniform(-0.5, 0.5, size=(3, n_hidden))
        b1 = rng.uniform(-0.5, 0.5, size=n_hidden)
        W2 = rng.uniform(-0.5, 0.5, size=(n_hidden, 2))
        b2 = rng.uniform(-0.5, 0.5, size=2)
        params = (W1, b1, W2, b2)
        model = MLPClassifier()
        _, grads = model.loss_and_grad(X, codes, params)

        def loss():
            return model.loss_and_grad(X, codes, params)[0]

        for arr, grad in zip(params, grads):
            fd = central_diff(loss, arr)
            assert np.abs(grad - fd).max() <= 1e-3


class TestConfusionMetrics:
    def test_perfect_diagonal(self):
        out = metrics_from_confusion([[50, 0], [0, 50]], ["a", "b"])
        assert out["accuracy"] == 1.0
        assert out["weighted"]["f1"] == pytest.approx(1.0, abs=1e-12)
        assert out["weighted"]["mcc"] == pytest.approx(1.0, abs=1e-12)
        assert out["per_class"]["a"]["f1"] == 1.0
        assert out["per_class"]["b"]["mcc"] == 1.0

    def test_coin_flip_is_zero_mcc(self):
        out = metrics_from_confusion([[25, 25], [25, 25]], ["a", "b"])
        assert out["accuracy"] == 0.5
        assert out["weighted"]["mcc"] == pytest.approx(0.0, abs=1e-12)

    def test_binary_counts_hand_case(self):
        # positive class: tp=40 fn=20 fp=10 tn=30
        out = metrics_from_confusion([[40, 20], [10, 30]], ["pos", "neg"])
        pos = out["per_class"]["pos"]
        assert pos["precision"] == pytest.approx(0.8)
        assert pos["recall"] == pytest.approx(2 / 3)
        assert pos["f1"] == pytest.approx(8 / 11)
        want = (40 * 30 - 10 * 20) / math.sqrt(50 * 60 * 40 * 50)
        assert want == pytest.approx(1000 / math.sqrt(6_000_000), abs=1e-15)
        assert pos["mcc"] == pytest.approx(want, abs=1e-12)
        # the one-vs-rest reduction is symmetric for two classes
        assert out["per_class"]["neg"]["mcc"] == pytest.approx(want, abs=1e-12)

    def test_empty_classes_stay_defined(self):
        out = metrics_from_confusion([[5, 0], [0, 0]], ["a", "b"])
        b = out["per_class"]["b"]
        assert b["precision"] == 0.0 and b["recall"] == 0.0
        assert b["f1"] == 0.0 and b["support"] == 0
        assert out["weighted"]["f1"] == pytest.approx(1.0)

    def test_all_zero_matrix(self):
        out = metrics_from_confusion([[0, 0], [0, 0]], ["a", "b"])
        assert out["accuracy"] == 0.0
        assert out["weighted"]["f1"] == 0.0

    def _ovr_stats(self, mat, i):
        total = sum(sum(row) for row in mat)
        tp = mat[i][i]
        fn = sum(mat[i]) - tp
        fp = sum(row[i] for row in mat) - tp
        tn = total - tp - fn - fp
        return tp, fp, fn, tn

    def test_weighted_mcc_is_support_weighted_ovr(self):
        mat = [[3, 1, 0], [0, 4, 1], [1, 0, 5]]
        classes = ["a", "b", "c"]
        out = metrics_from_confusion(mat, classes)
        num = 0.0
        den = 0.0
        for i, cls in enumerate(classes):
            tp, fp, fn, tn = self._ovr_stats(mat, i)
            d = math.sqrt(float(tp + fp) * (tp + fn) * (tn + fp) * (tn + fn))
            mcc = (tp * tn - fp * fn) / d if d else 0.0
            support = tp + fn
            assert out["per_class"][cls]["mcc"] == pytest.approx(mcc, abs=1e-12)
            num += mcc * support
            den += support
        assert out["weighted"]["mcc"] == pytest.approx(num / den, abs=1e-12)

    def test_weighted_f1_identity_random_tables(self):
        rng = np.random.default_rng(99)
        for _ in range(20):
            mat = rng.integers(0, 12, size=(3, 3)).tolist()
            if sum(map(sum, mat)) == 0:
                continue
            out = metrics_from_confusion(mat, ["x", "y", "z"])
            num = 0.0
            den = 0.0
            for i, cls in enumerate(["x", "y", "z"]):
                tp, fp, fn, _ = self._ovr_stats(mat, i)
                p = tp / (tp + fp) if tp + fp else 0.0
                r = tp / (tp + fn) if tp + fn else 0.0
                f1 = 2 * p * r / (p + r) if p + r else 0.0
                num += f1 * (tp + fn)
                den += tp + fn
            want = num / den if den else 0.0
            assert out["weighted"]["f1"] == pytest.approx(want, abs=1e-12)

    def test_confusion_matrix_layout(self):
        mat = confusion_matrix(["a", "a", "b"], ["a", "b", "b"], ["a", "b"])
        assert mat == [[1, 1], [0, 1]]


def two_column(scores_for_one):
    s = np.asarray(scores_for_one, dtype=float)
    return np.c_[1.0 - s, s]


class TestAuc:
    def test_exact_three_quarters(self):
        scores = two_column([0.9, 0.8, 0.4, 0.3])
        overall, per_class = roc_auc_ovr([1, 0, 1, 0], scores, [0, 1])
        assert per_class[1] == 0.75
        assert per_class[0] == 0.75
        assert overall == 0.75

    def test_tied_scores_midrank(self):
        scores = two_column([0.9, 0.5, 0.5, 0.1])
        overall, per_class = roc_auc_ovr([1, 1, 0, 0], scores, [0, 1])
        assert per_class[1] == pytest.approx(0.875, abs=1e-12)
        assert overall == pytest.approx(0.875, abs=1e-12)

    def test_all_tied_is_half(self):
        scores = two_column([0.5, 0.5, 0.5, 0.5])
        overall, _ = roc_auc_ovr([1, 0, 1, 0], scores, [0, 1])
        assert overall == pytest.approx(0.5, abs=1e-12)

    def test_single_class_unscorable(self):
        overall, per_class = roc_auc_ovr([1, 1], np.ones((2, 1)), [1])
        assert overall is None
        assert per_class[1] is None

    def test_matches_pairwise_count(self):
        rng = np.random.default_rng(17)
        for _ in range(10):
            y = rng.integers(0, 2, size=25).tolist()
            if len(set(y)) < 2:
                continue
            # coarse grid forces duplicate scores
            s = rng.integers(0, 10, size=25) / 10.0
            _, per_class = roc_auc_ovr(y, two_column(s), [0, 1])
            pos = [v for v, t in zip(s, y) if t == 1]
            neg = [v for v, t in zip(s, y) if t == 0]
            hits = sum(
                1.0 if p > n else 0.5 if p == n else 0.0
                for p in pos for n in neg)
            assert per_class[1] == pytest.approx(
                hits / (len(pos) * len(neg)), abs=1e-12)


class TestStratifiedFolds:
    def test_balanced_assignment(self):
        labels = [1] * 12 + [2] * 12 + [3] * 12
        assignment, used, warnings = stratified_folds(labels, 10, seed=4)
        assert used == 10 and warnings == []
        assert len(assignment) == 36
        assert set(assignment) == set(range(10))
        for cls in (1, 2, 3):
            per_fold = [0] * used
            for i, lab in enumerate(labels):
                if lab == cls:
                    per_fold[assignment[i]] += 1
            assert max(per_fold) - min(per_fold) <= 1
            assert min(per_fold) >= 1

    def test_clamped_to_smallest_class(self):
        labels = ["a"] * 3 + ["b"] * 12
        assignment, used, warnings = stratified_folds(labels, 10, seed=0)
        assert used == 3
        assert len(warnings) == 1
        assert set(assignment) == {0, 1, 2}

    def test_rejects_singleton_class(self):
        with pytest.raises(CrossValError):
            stratified_folds(["a", "b", "b", "b"], 2)

    def test_seeded(self):
        labels = [0, 1] * 10
        a = stratified_folds(labels, 5, seed=9)
        b = stratified_folds(labels, 5, seed=9)
        assert a == b


class TestPreprocessing:
    def test_impute_uses_train_rows_only(self):
        X = np.array([
            [1.0, 0.0],
            [5.0, 0.0],
            [9.0, 1.0],
            [100.0, 1.0],
        ])
        filled, means = impute_columns(X, {0: 1}, train_rows=[0, 1, 3])
        # rows 2 and 3 are masked; the train mean over unmasked rows 0,1 is 3
        assert means == {0: 3.0}
        assert filled[2, 0] == 3.0 and filled[3, 0] == 3.0
        assert filled[0, 0] == 1.0 and filled[1, 0] == 5.0
        # input untouched
        assert X[2, 0] == 9.0

    def test_impute_all_absent_falls_back_to_zero(self):
        X = np.array([[4.0, 1.0], [7.0, 1.0]])
        filled, means = impute_columns(X, {0: 1}, train_rows=[0, 1])
        assert means == {0: 0.0}
        assert filled[:, 0].tolist() == [0.0, 0.0]

    def test_standardize_constant_column(self):
        X = np.array([[1.0, 5.0], [3.0, 5.0], [5.0, 5.0]])
        mu, sigma = standardize_params(X, [0, 1, 2])
        assert mu.tolist() == [3.0, 5.0]
        assert sigma.tolist() == [pytest.approx(math.sqrt(8 / 3)), 1.0]


def blob_data(n_per=15, seed=0):
    rng = np.random.default_rng(seed)
    a = rng.normal((-2, -2), 0.4, size=(n_per, 2))
    b = rng.normal((2, 2), 0.4, size=(n_per, 2))
    X = np.vstack([a, b])
    y = [0] * n_per + [1] * n_per
    return X, y


class TestCrossValidate:
    def test_separable_blobs(self):
        X, y = blob_data()
        report = cross_validate(
            X, y, lambda: LogisticRegression(epochs=200), n_folds=10, seed=1)
        assert report["n_folds"] == 10
        assert report["accuracy"] == 1.0
        assert report["weighted"]["f1"] == 1.0
        assert report["auc"] == 1.0
        assert np.trace(np.array(report["confusion"])) == 30

    def test_deterministic(self):
        X, y = blob_data(seed=3)
        run = lambda: cross_validate(
            X, y, lambda: DecisionTree(), n_folds=5, seed=7)
        assert run() == run()

    def test_column_hook_applied_from_train_rows(self):
        X, y = blob_data(n_per=10, seed=5)
        X = np.c_[X, np.zeros(20)]
        seen = []

        def hook(train_rows):
            seen.append(sorted(train_rows))
            # a constant rebuilt column must not break anything
            return {2: np.full(20, 1.5)}

        report = cross_validate(
            X, y, lambda: DecisionTree(), n_folds=5, seed=2, column_hook=hook)
        assert len(seen) == 5
        assert all(len(rows) == 16 for rows in seen)
        assert report["accuracy"] == 1.0

    def test_impute_inside_folds(self):
        X, y = blob_data(n_per=10, seed=8)
        ind = np.zeros(20)
        ind[3] = 1.0
        X = np.c_[X, ind]
        report = cross_validate(
            X, y, lambda: LogisticRegression(epochs=100), n_folds=5, seed=0,
            indicator_pairs={0: 2})
        assert report["accuracy"] >= 0.9


SMALL_PARAMS = {
    "logreg": {"epochs": 60},
    "tree": {},
    "forest": {"n_trees": 10},
    "bagging": {"n_trees": 5},
    "adaboost": {"n_rounds": 10},
    "mlp": {"epochs": 25},
}


class TestPersistence:
    @pytest.mark.parametrize("algorithm", sorted(ml.ALGORITHMS))
    def test_save_load_reproduces_scores(self, algorithm, tmp_path):
        X, y = blob_data(n_per=12, seed=11)
        model, seconds, warnings = ml.train_model(
            algorithm, X, y, seed=5, hyperparams=SMALL_PARAMS[algorithm])
        assert warnings == []
        path = tmp_path / ("%s.json" % algorithm)
        ml.save_model(
            path, model, algorithm=algorithm, seed=5,
            hyperparams=SMALL_PARAMS[algorithm],
            feature_names=["x", "y"], catalog_fingerprint="cafe",
            standardization=None, imputation_means={}, profiles=None,
            training_seconds=seconds, classes=model.classes_)
        loaded, payload = ml.load_model(path)
        fresh = np.random.default_rng(23).normal(size=(8, 2)) * 3
        assert np.array_equal(
            model.predict_scores(fresh), loaded.predict_scores(fresh))
        assert model.predict(fresh) == loaded.predict(fresh)
        assert payload["algorithm"] == algorithm

    def test_version_gate(self, tmp_path):
        import json
        X, y = blob_data(n_per=5, seed=1)
        model, seconds, _ = ml.train_model("tree", X, y)
        path = tmp_path / "m.json"
        payload = ml.save_model(
            path, model, algorithm="tree", seed=0, hyperparams={},
            feature_names=["x", "y"], catalog_fingerprint="cafe",
            standardization=None, imputation_means={}, profiles=None,
            training_seconds=seconds, classes=model.classes_)
        payload["format_version"] = 99
        path.write_text(json.dumps(payload))
        with pytest.raises(ValueError):
            ml.load_model(path)

    def test_constant_model_round_trip(self, tmp_path):
        X = np.zeros((4, 2))
        model, seconds, warnings = ml.train_model("logreg", X, ["z"] * 4)
        assert isinstance(model, ml.ConstantModel)
        assert len(warnings) == 1
        path = tmp_path / "c.json"
        ml.save_model(
            path, model, algorithm="logreg", seed=0, hyperparams={},
            feature_names=["x", "y"], catalog_fingerprint="cafe",
            standardization=None, imputation_means={}, profiles=None,
            training_seconds=seconds, classes=model.classes_)
        loaded, payload = ml.load_model(path)
        assert payload["model_kind"] == "constant"
        assert loaded.predict(np.ones((3, 2))) == ["z", "z", "z"]
        scores = loaded.predict_scores(np.ones((3, 2)))
        assert scores.shape == (3, 1) and scores.tolist() == [[1.0]] * 3


class TestBuildModel:
    def test_unknown_algorithm(self):
        with pytest.raises(ValueError, match="unknown algorithm"):
            ml.build_model("svm")

    def test_unknown_hyperparam(self):
        with pytest.raises(ValueError, match="does not accept"):
            ml.build_model("logreg", {"depth": 3})

    def test_defaults(self):
        model = ml.build_model("logreg")
        assert model.lr == 0.1 and model.epochs == 500 and model.l2 == 1e-4
        mlp = ml.build_model("mlp")
        assert mlp.lr == 0.3 and mlp.momentum == 0.2 and mlp.epochs == 200
        forest = ml.build_model("forest")
        assert forest.n_trees == 100 and forest.max_features == "sqrt"
        bag = ml.build_model("bagging")
        assert bag.n_trees == 50
        boost = ml.build_model("adaboost")
        assert boost.n_rounds == 100 and boost.max_depth == 2

    def test_ensure_row_width(self):
        payload = {"feature_names": ["a", "b", "c"], "catalog_fingerprint": "x"}
        ml.ensure_row_width(payload, np.zeros((2, 3)))
        with pytest.raises(ValueError, match="row width"):
            ml.ensure_row_width(payload, np.zeros((2, 4)))


class TestScoreRows:
    @pytest.mark.parametrize("algorithm", sorted(ml.ALGORITHMS))
    def test_scores_sum_to_one(self, algorithm):
        rng = np.random.default_rng(31)
        X = rng.normal(size=(24, 3))
        y = [i % 3 for i in range(24)]
        model = ml.build_model(algorithm, SMALL_PARAMS[algorithm])
        model.fit(X, y, seed=2)
        scores = model.predict_scores(rng.normal(size=(10, 3)))
        assert scores.shape == (10, 3)
        assert np.allclose(scores.sum(axis=1), 1.0, atol=1e-12)
        assert (scores >= 0).all()

    def test_untrained_logreg_is_uniform(self):
        model = LogisticRegression(epochs=0)
        model.fit(np.zeros((6, 2)), [0, 1, 2] * 2)
        scores = model.predict_scores(np.ones((4, 2)))
        assert np.allclose(scores, 1.0 / 3.0, atol=1e-15)

    def test_predict_follows_argmax(self):
        X, y = blob_data(n_per=10, seed=6)
        model = RandomForest(n_trees=7).fit(X, y, seed=1)
        scores = model.predict_scores(X)
        want = [model.classes_[i] for i in scores.argmax(axis=1)]
        assert model.predict(X) == want


class TestEnsembles:
    def test_rowwise_scores_independent(self):
        X, y = blob_data(n_per=10, seed=12)
        for model in (
            RandomForest(n_trees=9).fit(X, y, seed=3),
            BaggingClassifier(n_trees=7).fit(X, y, seed=3),
        ):
            full = model.predict_scores(X)
            for i in (0, 7, 19):
                single = model.predict_scores(X[i:i + 1])
                assert np.array_equal(full[i], single[0])

    def test_forest_reduces_to_cart(self):
        rng = np.random.default_rng(44)
        X = rng.normal(size=(40, 5))
        y = [i % 3 for i in range(40)]
        forest = RandomForest(n_trees=1, bootstrap=False, max_features=5)
        forest.fit(X, y, seed=9)
        cart = DecisionTree().fit(X, y, seed=9)
        fresh = rng.normal(size=(15, 5))
        assert forest.predict(fresh) == cart.predict(fresh)
        assert np.array_equal(
            forest.trees[0].predict_scores(fresh), cart.predict_scores(fresh))

    def test_adaboost_bookkeeping_chain(self):
        # replay the stored rounds: every recomputed weighted error must
        # be below random guessing, match its alpha, and each reweighted
        # distribution must sum to one
        rng = np.random.default_rng(50)
        X = rng.normal(size=(60, 4))
        y = (X[:, 0] + 0.3 * rng.normal(size=60) > 0).astype(int).tolist()
        model = AdaBoostClassifier(n_rounds=12).fit(X, y, seed=6)
        assert model.members, "boosting accepted no rounds"
        n = len(y)
        n_classes = len(model.classes_)
        guess = (n_classes - 1) / n_classes
        w = np.full(n, 1.0 / n)
        y_arr = np.array(y)
        for tree, alpha in model.members:
            assert abs(w.sum() - 1.0) <= 1e-12
            miss = np.array(tree.predict(X)) != y_arr
            err = max(float(w[miss].sum()), 1e-12)
            assert err < guess
            want_alpha = math.log((1 - err) / err) + math.log(n_classes - 1)
            assert alpha == pytest.approx(want_alpha, abs=1e-12)
            w = w * np.exp(alpha * miss)
            w = w / w.sum()

    def test_adaboost_degenerate_constant(self):
        # labels independent of a constant feature matrix: no stump can
        # beat random guessing, so round one ends training
        X = np.zeros((12, 2))
        y = [0, 1, 2] * 4
        model, _, warnings = ml.train_model(
            "adaboost", X, y, hyperparams={"n_rounds": 5})
        assert model.constant_label == 0
        assert any("random guessing" in w for w in warnings)
        assert model.predict(np.zeros((2, 2))) == [0, 0]

    def test_member_rngs_are_stable(self):
        a = [r.integers(0, 1000, 3).tolist() for r in _member_rngs(5, 4)]
        b = [r.integers(0, 1000, 3).tolist() for r in _member_rngs(5, 4)]
        assert a == b


class TestTrainingTime:
    def test_nested_subsets(self):
        rng = np.random.default_rng(60)
        X = rng.normal(size=(30, 6))
        y = [i % 2 for i in range(30)]
        names = ["f%d" % j for j in range(6)]
        ranked = ["f3", "f1", "f5", "f0", "f2", "f4"]
        table = ml.measure_training_time(
            "tree", X, y, [1, 3, 6], ranked, names)
        assert [row["features"] for row in table] == [1, 3, 6]
        assert all(row["seconds"] >= 0.0 for row in table)

    def test_count_out_of_range(self):
        X = np.zeros((4, 2))
        with pytest.raises(ValueError, match="outside the ranking"):
            ml.measure_training_time(
                "tree", X, [0, 1, 0, 1], [3], ["a", "b"], ["a", "b"])

    def test_unknown_ranked_name(self):
        X = np.zeros((4, 2))
        with pytest.raises(ValueError, match="not in the matrix"):
            ml.measure_training_time(
                "tree", X, [0, 1, 0, 1], [1], ["ghost"], ["a", "b"])
