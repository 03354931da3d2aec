"""Command-line interface.

Subcommands cover the full workflow: corpus extraction, effect-size
reporting, feature ranking, model training, cross-validation, single-text
classification, synthetic corpus generation, and grid experiments.

Exit codes: 0 success, 1 validation or usage error, 2 extraction run
where more than 10% of the documents failed.
"""

import argparse
import json
import logging
import os
import sys

import numpy as np

from . import catalog, corpus, experiment, ml, resources, synthgen
from .ml import crossval
from .pipeline import analyze_text, extract_features, PipelineError
from .readability import DEFAULT_WINDOW
from .tagging import PerceptronTagger, default_tagger_path

log = logging.getLogger("textlevel")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARTIAL = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; 2 is reserved for partial
    # extraction failure here, so remap
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write("%s: error: %s\n" % (self.prog, message))
        raise SystemExit(EXIT_USAGE)


def _die(message):
    sys.stderr.write("error: %s\n" % message)
    raise SystemExit(EXIT_USAGE)


def _write_json(path, payload):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, sort_keys=True, indent=1)
        fh.write("\n")


def _read_matrix(path):
    try:
        return corpus.read_matrix(path)
    except (OSError, corpus.CorpusError) as exc:
        _die(str(exc))


# ------------------------------------------------------------- extract

def cmd_extract(args):
    try:
        entries = corpus.scan_corpus(args.corpus)
    except corpus.CorpusError as exc:
        _die(str(exc))
    profiles = args.profiles
    if profiles != "train" and not os.path.isfile(profiles):
        _die("--profiles must be 'train' or an existing profiles file, "
             "got %r" % profiles)
    config = corpus.ExtractConfig(
        window=args.window,
        use_trees=args.trees,
        profiles=profiles,
        workers=args.workers,
    )
    try:
        result = corpus.extract_matrix(entries, args.resources, config=config)
        corpus.write_matrix(args.out, result)
    except (OSError, corpus.CorpusError, resources.ResourceError) as exc:
        _die(str(exc))
    kept = len(result.doc_ids)
    print("extracted %d/%d documents -> %s" % (kept, result.total, args.out))
    if result.failures:
        for doc_id, err in result.failures:
            sys.stderr.write("failed: %s: %s\n" % (doc_id, err))
        frac = result.failure_fraction
        sys.stderr.write("%d of %d documents failed (%.0f%%)\n"
                         % (len(result.failures), result.total, 100 * frac))
        if frac > corpus.FAILURE_LIMIT:
            raise SystemExit(EXIT_PARTIAL)
    return EXIT_OK


# ----------------------------------------------------- effects / rank

def cmd_effects(args):
    data = _read_matrix(args.matrix)
    try:
        report = experiment.build_effect_report(data)
    except corpus.CorpusError as exc:
        _die(str(exc))
    _write_json(args.out, report)
    bands = report["band_counts"]
    print("effects for %d features over %d documents -> %s "
          "(strong %d, moderate %d, weak %d)"
          % (len(report["features"]), report["n_documents"], args.out,
             bands["strong"], bands["moderate"], bands["weak"]))
    return EXIT_OK


def cmd_rank(args):
    data = _read_matrix(args.matrix)
    try:
        rankings = experiment.build_rankings(data, [args.method], args.seed)
    except corpus.CorpusError as exc:
        _die(str(exc))
    ranked = rankings[args.method][: args.top]
    payload = {"method": args.method, "top": args.top, "seed": args.seed,
               "features": ranked}
    if args.out:
        _write_json(args.out, payload)
        print("top %d by %s -> %s" % (len(ranked), args.method, args.out))
    else:
        json.dump(payload, sys.stdout, sort_keys=True, indent=1)
        sys.stdout.write("\n")
    return EXIT_OK


# ------------------------------------------------------- train / xval

def _labeled_or_die(data):
    try:
        return experiment._labeled(data)
    except corpus.CorpusError as exc:
        _die(str(exc))


def cmd_train(args):
    data = _read_matrix(args.matrix)
    rows, X, y = _labeled_or_die(data)
    pairs = catalog.indicator_pairs()
    filled, means = crossval.impute_columns(X, pairs, list(range(len(y))))
    mu, sigma = crossval.standardize_params(filled, list(range(len(y))))
    Z = (filled - mu) / sigma
    try:
        model, seconds, warnings = ml.train_model(args.algo, Z, y, seed=args.seed)
    except ValueError as exc:
        _die(str(exc))
    for w in warnings:
        sys.stderr.write("warning: %s\n" % w)

    profiles = None
    side = corpus.sidecar_path(args.matrix)
    if os.path.isfile(side):
        levels, _ = corpus.load_sidecar(side)
        if levels is not None:
            profiles = {str(lv): {str(o): prof for o, prof in by.items()}
                        for lv, by in levels.items()}
    ml.save_model(
        args.out, model,
        algorithm=args.algo,
        seed=args.seed,
        hyperparams={},
        feature_names=list(catalog.FEATURE_NAMES) + list(catalog.INDICATOR_NAMES),
        catalog_fingerprint=data.catalog_fingerprint,
        standardization={"mean": mu.tolist(), "std": sigma.tolist()},
        imputation_means={str(col): val for col, val in means.items()},
        profiles=profiles,
        training_seconds=seconds,
        classes=sorted(set(y)),
    )
    print("trained %s on %d documents (%.2fs) -> %s"
          % (args.algo, len(y), seconds, args.out))
    return EXIT_OK


def _jsonable_cv(report):
    out = dict(report)
    out["confusion"] = np.asarray(report["confusion"]).astype(int).tolist()
    return out


def cmd_xval(args):
    data = _read_matrix(args.matrix)
    _, X, y = _labeled_or_die(data)
    hook = None
    side = corpus.sidecar_path(args.matrix)
    if os.path.isfile(side):
        _, docs = corpus.load_sidecar(side)
        try:
            full_hook = corpus.profile_column_hook(data, docs)
        except corpus.CorpusError:
            full_hook = None
        if full_hook is not None:
            rows = data.labeled_rows()

            def hook(train_rows, _rows=rows, _h=full_hook):
                full_train = [_rows[i] for i in train_rows]
                return {col: np.asarray(vals)[_rows]
                        for col, vals in _h(full_train).items()}

    try:
        report = ml.cross_validate(
            X, y, ml.ALGORITHMS[args.algo], n_folds=args.folds,
            seed=args.seed, indicator_pairs=catalog.indicator_pairs(),
            column_hook=hook)
    except (ValueError, ml.CrossValError) as exc:
        _die(str(exc))
    for w in report["warnings"]:
        sys.stderr.write("warning: %s\n" % w)
    _write_json(args.report, _jsonable_cv(report))
    print("%s %d-fold: accuracy %.4f, weighted F1 %.4f, AUC %.4f -> %s"
          % (args.algo, report["n_folds"], report["accuracy"],
             report["weighted"]["f1"], report["auc"], args.report))
    return EXIT_OK


# ------------------------------------------------------------ classify

def cmd_classify(args):
    try:
        model, payload = ml.load_model(args.model)
    except (OSError, ValueError, KeyError) as exc:
        _die("cannot load model: %s" % exc)
    if payload["catalog_fingerprint"] != catalog.catalog_fingerprint():
        _die("model was trained with catalog %s; this build is %s"
             % (payload["catalog_fingerprint"], catalog.catalog_fingerprint()))

    resources_dir = args.resources or resources.default_resources_dir()
    try:
        bundle = resources.load_resources(resources_dir)
        tagger = PerceptronTagger.load(args.tagger or default_tagger_path())
        with open(args.text, "rb") as fh:
            text = fh.read().decode("utf-8", errors="replace")
    except (OSError, resources.ResourceError, ValueError) as exc:
        _die(str(exc))

    profiles = None
    if payload.get("profiles"):
        profiles = {int(lv): {int(o): prof for o, prof in by.items()}
                    for lv, by in payload["profiles"].items()}
    try:
        doc = analyze_text(text, bundle, tagger)
        fv = extract_features(doc, bundle, profiles=profiles,
                              window=args.window)
    except PipelineError as exc:
        _die(str(exc))

    row = np.array([fv.feature_row() + fv.indicator_row()], dtype=np.float64)
    means = {int(col): val for col, val in payload["imputation_means"].items()}
    for feat_col, ind_col in catalog.indicator_pairs().items():
        if row[0, ind_col] >= 0.5:
            row[0, feat_col] = means.get(feat_col, 0.0)
    mu = np.asarray(payload["standardization"]["mean"], dtype=np.float64)
    sigma = np.asarray(payload["standardization"]["std"], dtype=np.float64)
    row = (ml.ensure_row_width(payload, row) - mu) / sigma

    label = model.predict(row)[0]
    scores = model.predict_scores(row)[0]
    print(json.dumps({
        "label": label,
        "algorithm": payload["algorithm"],
        "scores": {str(c): float(s)
                   for c, s in zip(model.classes_, scores)},
    }, sort_keys=True))
    return EXIT_OK


# --------------------------------------------------- synth / experiment

def cmd_synth(args):
    if args.per_level < 10:
        _die("--per-level must be at least 10 (got %d)" % args.per_level)
    paths = synthgen.write_corpus(args.out, args.seed, args.per_level)
    print("wrote %d documents (3 levels x %d) under %s"
          % (len(paths), args.per_level, args.out))
    return EXIT_OK


def cmd_experiment(args):
    try:
        summary = experiment.run_experiment(
            args.spec, log=lambda msg: sys.stderr.write(msg + "\n"))
    except experiment.ExperimentSpecError as exc:
        for problem in exc.problems:
            sys.stderr.write("spec problem: %s\n" % problem)
        raise SystemExit(EXIT_USAGE)
    except (OSError, corpus.CorpusError, ValueError) as exc:
        _die(str(exc))
    json.dump(summary, sys.stdout, sort_keys=True, indent=1)
    sys.stdout.write("\n")
    return EXIT_OK


# -------------------------------------------------------------- parser

def build_parser():
    parser = _Parser(
        prog="textlevel",
        description="Text difficulty measurement and classification toolkit.",
    )
    parser.add_argument("--verbose", action="store_true",
                        help="log progress details to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("extract", help="build a feature matrix from a corpus",
                       parents=[], conflict_handler="resolve")
    p.add_argument("--corpus", required=True, metavar="DIR")
    p.add_argument("--resources", required=True, metavar="DIR")
    p.add_argument("--out", required=True, metavar="FILE")
    p.add_argument("--trees", action="store_true",
                   help="use sibling .trees files when present")
    p.add_argument("--window", type=int, default=DEFAULT_WINDOW, metavar="N")
    p.add_argument("--profiles", default="train", metavar="train|FILE",
                   help="'train' builds level profiles from labeled docs; "
                        "a path loads saved profiles")
    p.add_argument("--workers", type=int, default=1, metavar="N")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("effects", help="ANOVA effect sizes per feature")
    p.add_argument("--matrix", required=True, metavar="FILE")
    p.add_argument("--out", required=True, metavar="FILE")
    p.set_defaults(func=cmd_effects)

    p = sub.add_parser("rank", help="rank features by a selection method")
    p.add_argument("--matrix", required=True, metavar="FILE")
    p.add_argument("--method", required=True,
                   choices=list(experiment.SELECTORS))
    p.add_argument("--top", required=True, type=int, metavar="K")
    p.add_argument("--seed", type=int, default=0, metavar="S")
    p.add_argument("--out", metavar="FILE",
                   help="write JSON here instead of stdout")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("train", help="fit one model on all labeled rows")
    p.add_argument("--matrix", required=True, metavar="FILE")
    p.add_argument("--algo", required=True, choices=sorted(ml.ALGORITHMS))
    p.add_argument("--seed", type=int, default=0, metavar="S")
    p.add_argument("--out", required=True, metavar="MODEL")
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("xval", help="stratified k-fold cross-validation")
    p.add_argument("--matrix", required=True, metavar="FILE")
    p.add_argument("--algo", required=True, choices=sorted(ml.ALGORITHMS))
    p.add_argument("--folds", type=int, default=10, metavar="K")
    p.add_argument("--seed", type=int, default=0, metavar="S")
    p.add_argument("--report", required=True, metavar="FILE")
    p.set_defaults(func=cmd_xval)

    p = sub.add_parser("classify", help="score one text file with a model")
    p.add_argument("--model", required=True, metavar="MODEL")
    p.add_argument("--text", required=True, metavar="FILE")
    p.add_argument("--resources", metavar="DIR",
                   help="resource bundle (default: packaged)")
    p.add_argument("--tagger", metavar="FILE",
                   help="tagger model (default: packaged)")
    p.add_argument("--window", type=int, default=DEFAULT_WINDOW, metavar="N")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("synth", help="generate a labeled synthetic corpus")
    p.add_argument("--seed", required=True, type=int, metavar="S")
    p.add_argument("--per-level", required=True, type=int, metavar="N")
    p.add_argument("--out", required=True, metavar="DIR")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("experiment", help="run a JSON experiment file")
    p.add_argument("--spec", required=True, metavar="FILE")
    p.set_defaults(func=cmd_experiment)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
