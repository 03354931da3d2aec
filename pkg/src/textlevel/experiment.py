"""Grid experiment runner: algorithms x selection methods x subset sizes.

A JSON experiment file names the matrix (or a train/test pair), the
algorithms, the selection methods, and the feature-count grid. One run
emits four report files into the output directory:

    effects.json    per-feature ANOVA effect sizes over the label groups
    rankings.json   feature orderings per selection method
    cells.json      one evaluation report per grid cell
    timings.json    wall-clock training seconds (kept out of the
                    deterministic reports on purpose)

Everything except timings.json is reproducible byte for byte from the
experiment file and its seed.
"""

import json
import os

import numpy as np

from . import analysis, catalog, corpus, ml
from .ml import crossval

SELECTORS = ("omega", "cfs", "relieff", "svm")

DEFAULT_FOLDS = 10


class ExperimentSpecError(ValueError):
    """Carries every validation problem found, not just the first."""

    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__(
            "invalid experiment file (%d problem%s):\n  %s"
            % (len(self.problems), "" if len(self.problems) == 1 else "s",
               "\n  ".join(self.problems))
        )


_KNOWN_KEYS = {
    "matrix", "train_matrix", "test_matrix", "algos", "algorithms",
    "selectors", "feature_counts", "folds", "seed", "out_dir",
    "measure_times",
}


def validate_spec(raw, base_dir):
    """Normalize an experiment dict, collecting all problems at once."""
    problems = []
    if not isinstance(raw, dict):
        raise ExperimentSpecError(["experiment file must hold a JSON object"])

    unknown = sorted(set(raw) - _KNOWN_KEYS)
    for key in unknown:
        problems.append("unknown key %r" % key)

    def path_of(key):
        value = raw.get(key)
        if not isinstance(value, str) or not value:
            problems.append("%r must be a file path" % key)
            return None
        full = value if os.path.isabs(value) else os.path.join(base_dir, value)
        if not os.path.isfile(full):
            problems.append("%s: file not found (%s)" % (key, full))
            return None
        return full

    mode = None
    matrix = train = test = None
    has_single = "matrix" in raw
    has_pair = "train_matrix" in raw or "test_matrix" in raw
    if has_single and has_pair:
        problems.append("give either 'matrix' or the train/test pair, not both")
    elif has_single:
        mode = "cv"
        matrix = path_of("matrix")
    elif "train_matrix" in raw and "test_matrix" in raw:
        mode = "transfer"
        train = path_of("train_matrix")
        test = path_of("test_matrix")
    elif has_pair:
        problems.append("train/test mode needs both 'train_matrix' and 'test_matrix'")
    else:
        problems.append("no matrix named: set 'matrix' or 'train_matrix'+'test_matrix'")

    algos = raw.get("algos", raw.get("algorithms"))
    if "algos" in raw and "algorithms" in raw:
        problems.append("give 'algos' or 'algorithms', not both")
    if not isinstance(algos, list) or not algos:
        problems.append("'algos' must be a non-empty list")
        algos = []
    for a in algos:
        if a not in ml.ALGORITHMS:
            problems.append("unknown algorithm %r (choose from %s)"
                            % (a, ", ".join(sorted(ml.ALGORITHMS))))

    selectors = raw.get("selectors", [])
    if not isinstance(selectors, list):
        problems.append("'selectors' must be a list")
        selectors = []
    for s in selectors:
        if s not in SELECTORS:
            problems.append("unknown selector %r (choose from %s)"
                            % (s, ", ".join(SELECTORS)))

    counts = raw.get("feature_counts", [])
    if not isinstance(counts, list):
        problems.append("'feature_counts' must be a list of integers")
        counts = []
    max_count = len(catalog.FEATURE_NAMES)
    for c in counts:
        if not isinstance(c, int) or isinstance(c, bool) or not 1 <= c <= max_count:
            problems.append("feature count %r outside 1..%d" % (c, max_count))
    if selectors and not counts:
        counts = [max_count]
    if counts and not selectors:
        problems.append("'feature_counts' given without 'selectors'")

    folds = raw.get("folds", DEFAULT_FOLDS)
    if not isinstance(folds, int) or isinstance(folds, bool) or folds < 2:
        problems.append("'folds' must be an integer >= 2")
        folds = DEFAULT_FOLDS

    seed = raw.get("seed", 0)
    if not isinstance(seed, int) or isinstance(seed, bool):
        problems.append("'seed' must be an integer")
        seed = 0

    out_dir = raw.get("out_dir", "reports")
    if not isinstance(out_dir, str) or not out_dir:
        problems.append("'out_dir' must be a directory path")
        out_dir = "reports"
    if not os.path.isabs(out_dir):
        out_dir = os.path.join(base_dir, out_dir)

    measure_times = raw.get("measure_times", True)
    if not isinstance(measure_times, bool):
        problems.append("'measure_times' must be true or false")
        measure_times = True

    if problems:
        raise ExperimentSpecError(problems)
    return {
        "mode": mode,
        "matrix": matrix,
        "train_matrix": train,
        "test_matrix": test,
        "algos": list(algos),
        "selectors": list(selectors),
        "feature_counts": list(counts),
        "folds": folds,
        "seed": seed,
        "out_dir": out_dir,
        "measure_times": measure_times,
    }


def load_spec(path):
    with open(path, "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    return validate_spec(raw, os.path.dirname(os.path.abspath(path)))


# ------------------------------------------------------------- reports

def _labeled(data):
    rows = data.labeled_rows()
    if not rows:
        raise corpus.CorpusError("matrix has no labeled rows")
    X = data.X[rows]
    y = [data.labels[i] for i in rows]
    if len(set(y)) < 2:
        raise corpus.CorpusError("labeled rows cover a single level only")
    return rows, X, y


def _imputed_features(X, y):
    """Feature block with absences filled from all labeled rows."""
    filled, _ = crossval.impute_columns(
        X, catalog.indicator_pairs(), list(range(len(y))))
    return filled[:, : len(catalog.FEATURE_NAMES)]


def build_effect_report(data):
    """Per-feature ANOVA table over the labeled rows of a matrix."""
    _, X, y = _labeled(data)
    feats = _imputed_features(X, y)
    rows = analysis.rank_omega(feats, y, catalog.FEATURE_NAMES)
    bands = {"weak": 0, "moderate": 0, "strong": 0}
    for r in rows:
        bands[r["band"]] += 1
    return {
        "catalog": data.catalog_fingerprint,
        "classes": sorted(set(y)),
        "n_documents": len(y),
        "band_counts": bands,
        "features": rows,
    }


def build_rankings(data, methods, seed):
    """Feature orderings per selection method, best first.

    CFS yields its greedy subset only, so its list can be shorter than
    the catalog; the other methods rank every feature.
    """
    _, X, y = _labeled(data)
    feats = _imputed_features(X, y)
    names = catalog.FEATURE_NAMES
    out = {}
    for method in methods:
        if method == "omega":
            rows = analysis.rank_omega(feats, y, names)
            ranked = [{"feature": r["feature"], "score": r["omega_sq"]}
                      for r in rows]
        elif method == "cfs":
            ranked = [{"feature": name, "score": merit}
                      for name, merit in analysis.select_cfs(feats, y, names)]
        elif method == "relieff":
            ranked = [{"feature": name, "score": w}
                      for name, w in analysis.rank_relieff(
                          feats, y, names, seed=seed)]
        elif method == "svm":
            ranked = [{"feature": name, "score": w}
                      for name, w in analysis.rank_svm_weights(
                          feats, y, names, seed=seed)]
        else:
            raise ValueError("unknown selector %r" % method)
        out[method] = ranked
    return out


# ---------------------------------------------------------- grid cells

def _subset_layout(feature_names):
    """Column indices keeping selected features plus their indicators.

    Returns (keep, pairs, translate) where `keep` indexes into the full
    matrix layout, `pairs` is the remapped feature->indicator dict, and
    `translate` maps full-layout columns to subset columns for hook
    replacement output.
    """
    name_col = {n: i for i, n in enumerate(catalog.FEATURE_NAMES)}
    n_feat = len(catalog.FEATURE_NAMES)
    keep = [name_col[n] for n in feature_names]
    ind_needed = []
    for n in feature_names:
        ind = catalog.INDICATOR_OF.get(n)
        if ind is not None and ind not in ind_needed:
            ind_needed.append(ind)
    ind_pos = {}
    for ind in ind_needed:
        ind_pos[ind] = len(keep)
        keep.append(n_feat + catalog.INDICATOR_NAMES.index(ind))
    pairs = {}
    for j, n in enumerate(feature_names):
        ind = catalog.INDICATOR_OF.get(n)
        if ind is not None:
            pairs[j] = ind_pos[ind]
    translate = {full: sub for sub, full in enumerate(keep)}
    return keep, pairs, translate


def _wrap_hook(hook, translate):
    if hook is None:
        return None

    def wrapped(train_rows):
        out = {}
        for col, values in hook(train_rows).items():
            sub = translate.get(col)
            if sub is not None:
                out[sub] = values
        return out

    return wrapped


def _cell_from_cv(report):
    return {
        "accuracy": report["accuracy"],
        "weighted": report["weighted"],
        "per_class": report["per_class"],
        "auc": report["auc"],
        "auc_per_class": report["auc_per_class"],
        "confusion": np.asarray(report["confusion"]).astype(int).tolist(),
        "classes": report["classes"],
        "n_folds": report["n_folds"],
        "folds": report["folds"],
        "warnings": report["warnings"],
    }


def _evaluate_cv(data, hook, algo, feature_names, folds, seed):
    rows, X, y = _labeled(data)
    keep, pairs, translate = _subset_layout(feature_names)
    Xs = X[:, keep]
    sub_hook = None
    if hook is not None:
        row_map = {full: i for i, full in enumerate(rows)}

        def rebased(train_rows):
            full_train = [rows[i] for i in train_rows]
            out = {}
            for col, values in hook(full_train).items():
                sub = translate.get(col)
                if sub is not None:
                    out[sub] = np.asarray(values)[rows]
            return out

        sub_hook = rebased
        del row_map
    report = ml.cross_validate(
        Xs, y, ml.ALGORITHMS[algo], n_folds=folds, seed=seed,
        indicator_pairs=pairs, column_hook=sub_hook)
    return _cell_from_cv(report)


def _evaluate_transfer(train_data, test_data, train_cols, test_cols,
                       algo, feature_names, seed):
    """Fit on every labeled train row, score every labeled test row.

    Imputation means and standardization moments come from the training
    matrix alone. `train_cols`/`test_cols` optionally override the
    profile-distance block so both sides face the same level profiles.
    """
    _, Xa, ya = _labeled(train_data)
    _, Xb, yb = _labeled(test_data)
    keep, pairs, translate = _subset_layout(feature_names)

    def apply_overrides(data, X, overrides):
        if not overrides:
            return X
        rows = data.labeled_rows()
        X = np.array(X, copy=True)
        for col, values in overrides.items():
            sub = translate.get(col)
            if sub is not None:
                X[:, sub] = np.asarray(values)[rows]
        return X

    Xa = apply_overrides(train_data, Xa[:, keep], train_cols)
    Xb = apply_overrides(test_data, Xb[:, keep], test_cols)

    both = np.vstack([Xa, Xb])
    train_rows = list(range(Xa.shape[0]))
    filled, _ = crossval.impute_columns(both, pairs, train_rows)
    mu, sigma = crossval.standardize_params(filled, train_rows)
    filled = (filled - mu) / sigma
    Za, Zb = filled[: Xa.shape[0]], filled[Xa.shape[0]:]

    model, seconds, warnings = ml.train_model(algo, Za, ya, seed=seed)
    preds = model.predict(Zb)
    scores = model.predict_scores(Zb)
    classes = sorted(set(ya) | set(yb))
    conf = ml.confusion_matrix(yb, preds, classes)
    overall = ml.metrics_from_confusion(conf, classes)
    # score columns follow model.classes_; absent classes stay zero
    full_scores = np.zeros((len(yb), len(classes)), dtype=np.float64)
    col_of = {c: j for j, c in enumerate(model.classes_)}
    for j, cls in enumerate(classes):
        if cls in col_of:
            full_scores[:, j] = scores[:, col_of[cls]]
    auc, auc_per_class = ml.roc_auc_ovr(yb, full_scores, classes)
    return {
        "accuracy": overall["accuracy"],
        "weighted": overall["weighted"],
        "per_class": overall["per_class"],
        "auc": auc,
        "auc_per_class": auc_per_class,
        "confusion": np.asarray(conf).astype(int).tolist(),
        "classes": classes,
        "n_train": len(ya),
        "n_test": len(yb),
        "warnings": warnings,
    }, seconds


def _hook_or_none(matrix_path, data):
    """Fold-rebuild hook when the sidecar is available, else None."""
    side = corpus.sidecar_path(matrix_path)
    if not os.path.isfile(side):
        return None
    _, docs = corpus.load_sidecar(side)
    try:
        return corpus.profile_column_hook(data, docs)
    except corpus.CorpusError:
        return None


def _transfer_overrides(spec, train_data, test_data):
    """Profile-distance columns for both sides from the training corpus.

    The training matrix's sidecar carries the level profiles built at
    extraction time; the held-out corpus is scored against those same
    profiles. Returns (train_cols, test_cols), either possibly None.
    """
    side_a = corpus.sidecar_path(spec["train_matrix"])
    side_b = corpus.sidecar_path(spec["test_matrix"])
    if not (os.path.isfile(side_a) and os.path.isfile(side_b)):
        return None, None
    levels, docs_a = corpus.load_sidecar(side_a)
    _, docs_b = corpus.load_sidecar(side_b)
    if levels is None:
        return None, None
    try:
        cols_a = corpus.profile_distance_columns(train_data, docs_a, levels)
        cols_b = corpus.profile_distance_columns(test_data, docs_b, levels)
    except corpus.CorpusError:
        return None, None
    return cols_a, cols_b


# ------------------------------------------------------------- the run

def _write_json(path, payload):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, sort_keys=True, indent=1)
        fh.write("\n")


def run_experiment(spec_path, log=None):
    """Execute one experiment file; returns the summary dict.

    Raises ExperimentSpecError on invalid input and CorpusError on
    unreadable matrices.
    """
    spec = load_spec(spec_path)
    say = log if log is not None else (lambda msg: None)

    if spec["mode"] == "cv":
        data = corpus.read_matrix(spec["matrix"])
        rank_data = data
        hook = _hook_or_none(spec["matrix"], data)
        train_cols = test_cols = None
        test_data = None
    else:
        data = corpus.read_matrix(spec["train_matrix"])
        test_data = corpus.read_matrix(spec["test_matrix"])
        if data.catalog_fingerprint != test_data.catalog_fingerprint:
            raise corpus.CorpusError(
                "train matrix catalog %s does not match test matrix %s"
                % (data.catalog_fingerprint, test_data.catalog_fingerprint))
        rank_data = data
        hook = None
        train_cols, test_cols = _transfer_overrides(spec, data, test_data)

    os.makedirs(spec["out_dir"], exist_ok=True)
    seed = spec["seed"]

    say("effects: ANOVA over %d features" % len(catalog.FEATURE_NAMES))
    effects = build_effect_report(rank_data)
    _write_json(os.path.join(spec["out_dir"], "effects.json"), effects)

    rankings = {}
    if spec["selectors"]:
        say("rankings: %s" % ", ".join(spec["selectors"]))
        rankings = build_rankings(rank_data, spec["selectors"], seed)
        _write_json(os.path.join(spec["out_dir"], "rankings.json"), {
            "catalog": rank_data.catalog_fingerprint,
            "seed": seed,
            "methods": rankings,
        })

    all_features = list(catalog.FEATURE_NAMES)
    cells = []
    timings = []
    grid = []
    if spec["selectors"]:
        for algo in spec["algos"]:
            for method in spec["selectors"]:
                for count in spec["feature_counts"]:
                    grid.append((algo, method, count))
    else:
        for algo in spec["algos"]:
            grid.append((algo, None, len(all_features)))

    for algo, method, count in grid:
        if method is None:
            names = all_features
        else:
            ranked = [r["feature"] for r in rankings[method]]
            names = ranked[: min(count, len(ranked))]
        say("cell: algo=%s selector=%s features=%d"
            % (algo, method or "none", len(names)))
        cell = {
            "algorithm": algo,
            "selector": method,
            "features_requested": count,
            "features_used": len(names),
            "feature_names": names,
            "seed": seed,
        }
        if spec["mode"] == "cv":
            cell.update(_evaluate_cv(
                data, hook, algo, names, spec["folds"], seed))
        else:
            result, seconds = _evaluate_transfer(
                data, test_data, train_cols, test_cols, algo, names, seed)
            cell.update(result)
            timings.append({"algorithm": algo, "selector": method,
                            "features": len(names), "seconds": seconds})
        cells.append(cell)

    _write_json(os.path.join(spec["out_dir"], "cells.json"), {
        "catalog": data.catalog_fingerprint,
        "mode": spec["mode"],
        "seed": seed,
        "folds": spec["folds"] if spec["mode"] == "cv" else None,
        "cells": cells,
    })

    if spec["measure_times"] and spec["mode"] == "cv":
        say("timings: one fit per cell size")
        _, X, y = _labeled(data)
        keep_all, pairs_all, _ = _subset_layout(all_features)
        filled, _ = crossval.impute_columns(
            X[:, keep_all], pairs_all, list(range(len(y))))
        mu, sigma = crossval.standardize_params(filled, list(range(len(y))))
        Z = ((filled - mu) / sigma)[:, : len(all_features)]
        for algo in spec["algos"]:
            if spec["selectors"]:
                for method in spec["selectors"]:
                    ranked = [r["feature"] for r in rankings[method]]
                    counts = [min(c, len(ranked))
                              for c in spec["feature_counts"]]
                    counts = sorted(set(counts))
                    table = ml.measure_training_time(
                        algo, Z, y, counts, ranked, all_features, seed=seed)
                    for entry in table:
                        timings.append({"algorithm": algo, "selector": method,
                                        **entry})
            else:
                table = ml.measure_training_time(
                    algo, Z, y, [len(all_features)], all_features,
                    all_features, seed=seed)
                for entry in table:
                    timings.append({"algorithm": algo, "selector": None,
                                    **entry})
    if spec["measure_times"]:
        _write_json(os.path.join(spec["out_dir"], "timings.json"),
                    {"table": timings})

    best = None
    for cell in cells:
        key = (cell["weighted"]["f1"], -cell["features_used"])
        if best is None or key > best[0]:
            best = (key, cell)
    summary = {
        "mode": spec["mode"],
        "out_dir": spec["out_dir"],
        "seed": seed,
        "n_cells": len(cells),
        "files": ["effects.json", "cells.json"]
        + (["rankings.json"] if spec["selectors"] else [])
        + (["timings.json"] if spec["measure_times"] else []),
        "best_cell": {
            "algorithm": best[1]["algorithm"],
            "selector": best[1]["selector"],
            "features_used": best[1]["features_used"],
            "weighted_f1": best[1]["weighted"]["f1"],
        } if best else None,
    }
    _write_json(os.path.join(spec["out_dir"], "summary.json"), summary)
    return summary
