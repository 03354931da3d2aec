"""Corpus scanning and feature-matrix assembly.

A corpus is either a directory of level1/..levelK subdirectories of .txt
files or a directory with a manifest.csv (columns: file,label). Extraction
runs the whole per-document pipeline and produces a CSV matrix whose
column order depends only on the feature catalog, plus a sidecar JSON with
the per-document POS n-gram counts needed to rebuild level profiles inside
cross-validation folds.
"""

import csv
import json
import logging
import os
import re
from concurrent import futures
from dataclasses import dataclass, field

import numpy as np

from . import catalog, pipeline, readability, resources, synmetrics, trees
from .tagging import PerceptronTagger, default_tagger_path

log = logging.getLogger(__name__)

NGRAM_ORDERS = (2, 3, 4)
_ORDER_NAMES = ((2, "bigram"), (3, "trigram"), (4, "fourgram"))
_LEVEL_DIR = re.compile(r"^level([0-9]+)$")
MAX_LEVEL = 4
FAILURE_LIMIT = 0.10


class CorpusError(Exception):
    """Raised for corpus layout or matrix file problems."""


@dataclass
class ManifestEntry:
    doc_id: str
    path: str
    label: object = None      # int level or None for unlabeled
    tree_path: object = None


def _maybe_tree(path):
    cand = os.path.splitext(path)[0] + ".trees"
    return cand if os.path.isfile(cand) else None


def _check_unique(entries):
    seen = {}
    for e in entries:
        if e.doc_id in seen:
            raise CorpusError(
                "duplicate document id %r (%s and %s)"
                % (e.doc_id, seen[e.doc_id], e.path)
            )
        seen[e.doc_id] = e.path


def scan_corpus(root_dir):
    """Deterministic manifest of a corpus directory."""
    if not os.path.isdir(root_dir):
        raise CorpusError("corpus root is not a directory: %s" % root_dir)
    manifest_csv = os.path.join(root_dir, "manifest.csv")
    entries = []
    if os.path.isfile(manifest_csv):
        with open(manifest_csv, "r", encoding="utf-8", newline="") as fh:
            reader = csv.reader(fh)
            header = next(reader, None)
            if header is None or [h.strip().lower() for h in header] != ["file", "label"]:
                raise CorpusError("%s: expected header file,label" % manifest_csv)
            for ln, row in enumerate(reader, start=2):
                if not row:
                    continue
                if len(row) != 2:
                    raise CorpusError("%s:%d: expected 2 fields" % (manifest_csv, ln))
                rel, raw_label = row[0].strip(), row[1].strip()
                path = os.path.normpath(os.path.join(root_dir, rel))
                if not os.path.isfile(path):
                    raise CorpusError("%s:%d: file not found: %s" % (manifest_csv, ln, path))
                label = None
                if raw_label:
                    try:
                        label = int(raw_label)
                    except ValueError:
                        raise CorpusError(
                            "%s:%d: label must be an integer or empty" % (manifest_csv, ln)
                        ) from None
                    if not 1 <= label <= MAX_LEVEL:
                        raise CorpusError(
                            "%s:%d: label %d outside 1..%d" % (manifest_csv, ln, label, MAX_LEVEL)
                        )
                stem = os.path.splitext(os.path.basename(path))[0]
                entries.append(ManifestEntry(stem, path, label, _maybe_tree(path)))
        entries.sort(key=lambda e: e.doc_id)
    else:
        for name in sorted(os.listdir(root_dir)):
            m = _LEVEL_DIR.match(name)
            if m is None:
                continue
            level = int(m.group(1))
            if not 1 <= level <= MAX_LEVEL:
                raise CorpusError("level directory outside 1..%d: %s" % (MAX_LEVEL, name))
            sub = os.path.join(root_dir, name)
            for fname in sorted(os.listdir(sub)):
                if not fname.endswith(".txt"):
                    continue
                path = os.path.join(sub, fname)
                stem = os.path.splitext(fname)[0]
                entries.append(ManifestEntry(stem, path, level, _maybe_tree(path)))
    if not entries:
        raise CorpusError("empty corpus: %s" % root_dir)
    _check_unique(entries)
    return entries


@dataclass
class ExtractConfig:
    window: int = readability.DEFAULT_WINDOW
    canonical_spache: bool = False
    use_trees: bool = False
    # "train" builds level profiles from the labeled documents; a path
    # loads previously saved profiles; None leaves the block absent
    profiles: object = "train"
    workers: int = 1


def _read_text(path):
    with open(path, "rb") as fh:
        data = fh.read()
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError:
        log.warning("%s: undecodable bytes replaced", path)
        return data.decode("utf-8", errors="replace")


# Worker-side state for the extraction pool; each process loads its own
# copy of the immutable bundle and tagger.
_WORK = {}


def _init_worker(resources_dir, tagger_path, window, canonical_spache):
    _WORK["bundle"] = resources.load_resources(resources_dir)
    _WORK["tagger"] = PerceptronTagger.load(tagger_path)
    _WORK["window"] = window
    _WORK["canonical_spache"] = canonical_spache


def _extract_one(task):
    idx, path, tree_path = task
    try:
        text = _read_text(path)
        doc_trees = None
        if tree_path is not None:
            doc_trees = trees.parse_trees(_read_text(tree_path))
        doc = pipeline.analyze_text(text, _WORK["bundle"], _WORK["tagger"],
                                    trees=doc_trees)
        fv = pipeline.extract_features(
            doc, _WORK["bundle"], profiles=None, window=_WORK["window"],
            canonical_spache=_WORK["canonical_spache"])
        return idx, fv, None
    except Exception as exc:  # per-document isolation; run continues
        return idx, None, "%s: %s" % (type(exc).__name__, exc)


@dataclass
class MatrixResult:
    doc_ids: list
    labels: list
    vectors: list                 # FeatureVector per kept row
    profiles: object              # {level: {order: rank map}} or None
    failures: list = field(default_factory=list)
    total: int = 0

    @property
    def failure_fraction(self):
        return len(self.failures) / self.total if self.total else 0.0


def build_level_profiles(labels, ngram_maps_list):
    """Level profiles from labeled documents; needs levels exactly 1..3."""
    levels = sorted({l for l in labels if l is not None})
    if levels != list(pipeline.PROFILE_LEVEL_SLOTS):
        return None
    out = {}
    for level in levels:
        maps = [m for l, m in zip(labels, ngram_maps_list) if l == level]
        out[level] = {
            order: synmetrics.build_profile([m[order] for m in maps])
            for order in NGRAM_ORDERS
        }
    return out


def extract_matrix(entries, resources_dir, tagger_path=None, config=None):
    """Run the pipeline over a manifest and assemble matrix rows.

    Documents that fail to extract are skipped and logged; the caller
    decides what failure fraction is tolerable. Results are ordered by
    manifest index regardless of worker count.
    """
    config = config or ExtractConfig()
    tagger_path = tagger_path or default_tagger_path()
    tasks = [
        (i, e.path, e.tree_path if config.use_trees else None)
        for i, e in enumerate(entries)
    ]
    results = {}
    if config.workers > 1:
        with futures.ProcessPoolExecutor(
            max_workers=config.workers,
            initializer=_init_worker,
            initargs=(resources_dir, tagger_path, config.window,
                      config.canonical_spache),
        ) as pool:
            for idx, fv, err in pool.map(_extract_one, tasks, chunksize=4):
                results[idx] = (fv, err)
    else:
        _init_worker(resources_dir, tagger_path, config.window,
                     config.canonical_spache)
        for task in tasks:
            idx, fv, err = _extract_one(task)
            results[idx] = (fv, err)

    doc_ids, labels, vectors, failures = [], [], [], []
    for i, entry in enumerate(entries):
        fv, err = results[i]
        if err is not None:
            log.error("skipping %s: %s", entry.path, err)
            failures.append((entry.doc_id, err))
            continue
        doc_ids.append(entry.doc_id)
        labels.append(entry.label)
        vectors.append(fv)

    profiles = None
    if config.profiles == "train":
        profiles = build_level_profiles(labels, [v.ngram_maps for v in vectors])
        if profiles is None and any(l is not None for l in labels):
            log.warning(
                "profile-distance features absent: labeled levels are not "
                "exactly 1..3"
            )
    elif config.profiles:
        profiles = synmetrics.load_profiles(config.profiles)

    # profile distances are filled in post-hoc so extraction itself can
    # run one document at a time
    for fv in vectors:
        vals, miss = pipeline._profile_distance_block(fv.ngram_maps, profiles)
        for key, value in vals.items():
            fv.values[key] = value
            fv.absent[key] = miss

    return MatrixResult(doc_ids, labels, vectors, profiles,
                        failures, total=len(entries))


# -------------------------------------------------------- matrix files

def write_matrix(path, result):
    """Write the matrix CSV and its .profiles.json sidecar."""
    fingerprint = catalog.catalog_fingerprint()
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write("# textlevel matrix catalog=%s\n" % fingerprint)
        writer = csv.writer(fh)
        writer.writerow(catalog.COLUMN_NAMES)
        for doc_id, label, fv in zip(result.doc_ids, result.labels,
                                     result.vectors):
            row = [doc_id]
            row += [repr(v) for v in fv.feature_row()]
            row += [repr(v) for v in fv.indicator_row()]
            row.append("" if label is None else str(label))
            writer.writerow(row)

    sidecar = {
        "catalog": fingerprint,
        "orders": list(NGRAM_ORDERS),
        "levels": None if result.profiles is None else {
            str(level): {str(o): prof for o, prof in by_order.items()}
            for level, by_order in result.profiles.items()
        },
        "docs": {
            doc_id: {str(o): fv.ngram_maps[o] for o in NGRAM_ORDERS}
            for doc_id, fv in zip(result.doc_ids, result.vectors)
        },
    }
    with open(sidecar_path(path), "w", encoding="utf-8") as fh:
        json.dump(sidecar, fh, sort_keys=True, separators=(",", ":"))
        fh.write("\n")


def sidecar_path(matrix_path):
    return matrix_path + ".profiles.json"


def load_sidecar(path):
    """Returns (level_profiles or None, {doc_id: {order: counts}})."""
    with open(path, "r", encoding="utf-8") as fh:
        payload = json.load(fh)
    levels = payload.get("levels")
    if levels is not None:
        levels = {
            int(level): {int(o): prof for o, prof in by_order.items()}
            for level, by_order in levels.items()
        }
    docs = {
        doc_id: {int(o): counts for o, counts in by_order.items()}
        for doc_id, by_order in payload.get("docs", {}).items()
    }
    return levels, docs


@dataclass
class MatrixData:
    doc_ids: list
    X: np.ndarray                # (n, 112 + 28) float64
    labels: list                 # int or None per row
    catalog_fingerprint: str

    @property
    def n_features(self):
        return len(catalog.FEATURE_NAMES)

    def features_only(self):
        return self.X[:, : self.n_features]

    def labeled_rows(self):
        return [i for i, l in enumerate(self.labels) if l is not None]


def read_matrix(path):
    """Load a matrix CSV, refusing on any catalog mismatch."""
    expected = catalog.catalog_fingerprint()
    doc_ids, rows, labels = [], [], []
    with open(path, "r", encoding="utf-8", newline="") as fh:
        header = None
        stamped = None
        reader = csv.reader(fh)
        for row in reader:
            if not row:
                continue
            if row[0].startswith("#"):
                m = re.search(r"catalog=([0-9a-f]+)", ",".join(row))
                if m:
                    stamped = m.group(1)
                continue
            if header is None:
                header = row
                if header != list(catalog.COLUMN_NAMES):
                    raise CorpusError(
                        "%s: column layout does not match catalog %s"
                        % (path, expected)
                    )
                if stamped is not None and stamped != expected:
                    raise CorpusError(
                        "%s: written with catalog %s, current is %s"
                        % (path, stamped, expected)
                    )
                continue
            if len(row) != len(catalog.COLUMN_NAMES):
                raise CorpusError(
                    "%s: row with %d fields, expected %d"
                    % (path, len(row), len(catalog.COLUMN_NAMES))
                )
            doc_ids.append(row[0])
            try:
                rows.append([float(v) for v in row[1:-1]])
            except ValueError as exc:
                raise CorpusError("%s: %s" % (path, exc)) from None
            labels.append(int(row[-1]) if row[-1] != "" else None)
    if header is None or not rows:
        raise CorpusError("%s: no data rows" % path)
    X = np.array(rows, dtype=np.float64)
    return MatrixData(doc_ids, X, labels, stamped or expected)


# ---------------------------------------------- fold-wise profile hook

def profile_distance_columns(data, doc_maps, profiles):
    """Distance block of `data` against fixed level profiles.

    Returns {column index: values} in the hook format used by
    cross_validate, covering the nine distance columns plus a cleared
    absence indicator. Used when scoring one corpus against profiles
    built from another.
    """
    missing = [d for d in data.doc_ids if d not in doc_maps]
    if missing:
        raise CorpusError(
            "sidecar lacks n-gram maps for: %s" % ", ".join(sorted(missing)[:5])
        )
    if sorted(profiles) != list(pipeline.PROFILE_LEVEL_SLOTS):
        raise CorpusError(
            "profiles must cover levels %s"
            % ", ".join(str(l) for l in pipeline.PROFILE_LEVEL_SLOTS)
        )
    maps = [doc_maps[d] for d in data.doc_ids]
    n = len(maps)
    name_col = {name: i for i, name in enumerate(catalog.FEATURE_NAMES)}
    ind_col = data.n_features + catalog.INDICATOR_NAMES.index("profile_dist_missing")
    out = {}
    for order, oname in _ORDER_NAMES:
        for level in pipeline.PROFILE_LEVEL_SLOTS:
            col = name_col["profile_dist_%s_l%d" % (oname, level)]
            prof = profiles[level][order]
            out[col] = np.array(
                [synmetrics.profile_distance(
                    synmetrics.build_profile([maps[r][order]]), prof)
                 for r in range(n)],
                dtype=np.float64,
            )
    out[ind_col] = np.zeros(n, dtype=np.float64)
    return out


def profile_column_hook(data, doc_maps):
    """Column hook for cross_validate: rebuild the 9 profile-distance
    columns from each training fold and clear their absence indicator.

    `doc_maps` comes from the matrix sidecar; every matrix row needs an
    entry there.
    """
    missing = [d for d in data.doc_ids if d not in doc_maps]
    if missing:
        raise CorpusError(
            "sidecar lacks n-gram maps for: %s" % ", ".join(sorted(missing)[:5])
        )
    maps = [doc_maps[d] for d in data.doc_ids]
    labels = data.labels
    n = len(maps)
    name_col = {name: i for i, name in enumerate(catalog.FEATURE_NAMES)}
    ind_col = data.n_features + catalog.INDICATOR_NAMES.index("profile_dist_missing")
    text_profs = [
        {o: synmetrics.build_profile([m[o]]) for o in NGRAM_ORDERS}
        for m in maps
    ]

    def hook(train_rows):
        train_levels = sorted({labels[r] for r in train_rows})
        if train_levels != list(pipeline.PROFILE_LEVEL_SLOTS):
            return {}
        profs = {
            level: {
                o: synmetrics.build_profile(
                    [maps[r][o] for r in train_rows if labels[r] == level]
                )
                for o in NGRAM_ORDERS
            }
            for level in train_levels
        }
        out = {}
        for order, oname in _ORDER_NAMES:
            for level in train_levels:
                col = name_col["profile_dist_%s_l%d" % (oname, level)]
                out[col] = np.array(
                    [synmetrics.profile_distance(text_profs[r][order],
                                                 profs[level][order])
                     for r in range(n)],
                    dtype=np.float64,
                )
        out[ind_col] = np.zeros(n, dtype=np.float64)
        return out

    return hook
