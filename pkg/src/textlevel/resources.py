"""Loading and validation of the lexical resource bundle.

A resource directory holds a manifest.json naming each file and its
format. Required resources: pronunciation lexicon, word frequency table,
and the word lists. The psycholinguistic norms and the word vectors are
optional; when missing, the bundle records the gap and downstream
features degrade to absence flags instead of failing.
"""

import csv
import hashlib
import json
import logging
import os

import numpy as np

log = logging.getLogger(__name__)

PSYCH_NORMS = (
    "kfwf", "kfncat", "kfns", "tl_freq", "brown_freq",
    "fam", "conc", "imag", "meanc", "meanp", "aoa",
)

WORDLIST_KEYS = (
    "stopwords", "frequent_verbs", "spache", "dale_chall",
    "connectors", "argumentative_connectors", "prefixes", "suffixes",
)

REQUIRED = ("pron_lexicon", "frequency") + WORDLIST_KEYS
OPTIONAL = ("psych", "embeddings")


class ResourceError(Exception):
    """Raised for malformed or inconsistent resource files."""


class PronLexicon:
    """Word -> phoneme sequence, case-insensitive, first entry wins."""

    def __init__(self, entries):
        self._entries = entries

    def lookup(self, word):
        return self._entries.get(word.upper())

    def __len__(self):
        return len(self._entries)

    def __contains__(self, word):
        return word.upper() in self._entries

    def items(self):
        return self._entries.items()


class FrequencyTable:
    def __init__(self, ranks, freqs):
        self._ranks = ranks
        self._freqs = freqs
        self.max_rank = max(ranks.values()) if ranks else 0
        self.min_freq = min(freqs.values()) if freqs else 0.0

    def rank_of(self, word):
        return self._ranks.get(word)

    def freq_of(self, word):
        """Frequency of a word; absent words get half the table minimum."""
        got = self._freqs.get(word)
        if got is None:
            return self.min_freq * 0.5
        return got

    def __contains__(self, word):
        return word in self._ranks

    def __len__(self):
        return len(self._ranks)


class WordLists:
    def __init__(self, lists):
        self.stopwords = lists["stopwords"]
        self.frequent_verbs = lists["frequent_verbs"]
        self.spache = lists["spache"]
        self.dale_chall = lists["dale_chall"]
        self.connectors = lists["connectors"]
        self.argumentative_connectors = lists["argumentative_connectors"]
        self.prefixes = lists["prefixes"]
        self.suffixes = lists["suffixes"]
        bad = self.argumentative_connectors - self.connectors
        if bad:
            raise ResourceError(
                "argumentative connectors missing from the general list: %s"
                % ", ".join(sorted(bad))
            )


class PsychDatabase:
    """Per-word norm values. A missing cell means the norm is unknown
    for that word, never that it is zero."""

    def __init__(self, records):
        self._records = records

    def norms_for(self, word):
        return self._records.get(word)

    def __contains__(self, word):
        return word in self._records

    def __len__(self):
        return len(self._records)


class EmbeddingTable:
    def __init__(self, dim, vectors):
        self.dim = dim
        self._vectors = vectors

    def get(self, word):
        return self._vectors.get(word)

    def __contains__(self, word):
        return word in self._vectors

    def __len__(self):
        return len(self._vectors)


class ResourceBundle:
    def __init__(self, lexicon, frequency, wordlists, psych, embeddings,
                 missing, fingerprint):
        self.lexicon = lexicon
        self.frequency = frequency
        self.wordlists = wordlists
        self.psych = psych
        self.embeddings = embeddings
        self.missing = tuple(missing)
        self.fingerprint = fingerprint

    @property
    def has_embeddings(self):
        return self.embeddings is not None

    @property
    def has_psych(self):
        return self.psych is not None


def _read_lines(path):
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read().splitlines()


def load_pron_lexicon(path):
    entries = {}
    skipped = 0
    for ln, line in enumerate(_read_lines(path), start=1):
        if not line.strip() or line.startswith(";;;"):
            continue
        parts = line.split()
        if len(parts) < 2:
            raise ResourceError("%s:%d: expected WORD PH1 [PH2 ...]" % (path, ln))
        head = parts[0]
        # alternate pronunciations like WORD(2): first one wins
        if head.endswith(")") and "(" in head:
            base, _, _ = head.partition("(")
            if base.upper() in entries:
                continue
            head = base
        word = head.upper()
        if word in entries:
            continue
        phones = parts[1:]
        if not any(p[-1].isdigit() for p in phones):
            skipped += 1
            continue
        entries[word] = phones
    if skipped:
        log.warning("%s: skipped %d entries without a vowel phoneme", path, skipped)
    return PronLexicon(entries)


def load_frequency_table(path):
    ranks = {}
    freqs = {}
    seen_ranks = set()
    prev = None
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip().lower() for h in header] != ["rank", "word", "frequency"]:
            raise ResourceError("%s: expected header rank,word,frequency" % path)
        for ln, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != 3:
                raise ResourceError("%s:%d: expected 3 fields" % (path, ln))
            try:
                rank = int(row[0])
                freq = float(row[2])
            except ValueError as exc:
                raise ResourceError("%s:%d: %s" % (path, ln, exc)) from None
            word = row[1].strip().lower()
            if rank in seen_ranks:
                raise ResourceError("%s:%d: duplicate rank %d" % (path, ln, rank))
            if word in ranks:
                raise ResourceError("%s:%d: duplicate word %r" % (path, ln, word))
            if prev is not None and (rank <= prev[0] or freq >= prev[1]):
                raise ResourceError(
                    "%s:%d: ranks must increase and frequencies strictly decrease"
                    % (path, ln)
                )
            seen_ranks.add(rank)
            ranks[word] = rank
            freqs[word] = freq
            prev = (rank, freq)
    return FrequencyTable(ranks, freqs)


def load_wordlist(path):
    words = set()
    for ln, line in enumerate(_read_lines(path), start=1):
        entry = line.split("#", 1)[0].strip()
        if not entry:
            continue
        words.add(entry.lower())
    return frozenset(words)


def load_psych_db(path):
    expected = ["word"] + list(PSYCH_NORMS)
    records = {}
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip().lower() for h in header] != expected:
            raise ResourceError(
                "%s: expected header %s" % (path, ",".join(expected))
            )
        for ln, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(expected):
                raise ResourceError("%s:%d: expected %d fields" % (path, ln, len(expected)))
            word = row[0].strip().lower()
            norms = {}
            for name, cell in zip(PSYCH_NORMS, row[1:]):
                cell = cell.strip()
                if cell == "":
                    continue
                try:
                    norms[name] = float(cell)
                except ValueError:
                    raise ResourceError("%s:%d: bad value for %s" % (path, ln, name)) from None
            records[word] = norms
    return PsychDatabase(records)


def load_embeddings(path):
    vectors = {}
    dim = None
    for ln, line in enumerate(_read_lines(path), start=1):
        if not line.strip():
            continue
        parts = line.split()
        if dim is None:
            dim = len(parts) - 1
            if dim < 1:
                raise ResourceError("%s:%d: no vector components" % (path, ln))
        elif len(parts) - 1 != dim:
            raise ResourceError(
                "%s:%d: expected %d components, got %d" % (path, ln, dim, len(parts) - 1)
            )
        try:
            vec = np.array([float(x) for x in parts[1:]], dtype=np.float64)
        except ValueError as exc:
            raise ResourceError("%s:%d: %s" % (path, ln, exc)) from None
        if not np.all(np.isfinite(vec)):
            raise ResourceError("%s:%d: non-finite vector component" % (path, ln))
        vectors[parts[0].lower()] = vec
    if dim is None:
        raise ResourceError("%s: empty vector file" % path)
    return EmbeddingTable(dim, vectors)


_LOADERS = {
    "pron": load_pron_lexicon,
    "freq_csv": load_frequency_table,
    "wordlist": load_wordlist,
    "psych_csv": load_psych_db,
    "vectors": load_embeddings,
}

_EXPECTED_FORMAT = {
    "pron_lexicon": "pron",
    "frequency": "freq_csv",
    "psych": "psych_csv",
    "embeddings": "vectors",
}


def _bundle_fingerprint(dir_path, manifest, entries):
    h = hashlib.sha256()
    for key in sorted(entries):
        h.update(key.encode("utf-8"))
        h.update(b"\x00")
        with open(os.path.join(dir_path, entries[key]["file"]), "rb") as fh:
            h.update(fh.read())
        h.update(b"\x01")
    return h.hexdigest()


def load_resources(dir_path):
    """Load a resource directory into an immutable bundle.

    Returns a ResourceBundle whose fingerprint is a stable digest of the
    manifest entries and file contents, so identical inputs always produce
    the same fingerprint.
    """
    manifest_path = os.path.join(dir_path, "manifest.json")
    if not os.path.isfile(manifest_path):
        raise ResourceError("missing manifest: %s" % manifest_path)
    with open(manifest_path, "r", encoding="utf-8") as fh:
        try:
            manifest = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ResourceError("%s: %s" % (manifest_path, exc)) from None

    entries = {}
    for key, value in manifest.items():
        if not isinstance(value, dict) or "file" not in value or "format" not in value:
            raise ResourceError(
                "%s: entry %r must map to {file, format}" % (manifest_path, key)
            )
        fmt = value["format"]
        if fmt not in _LOADERS:
            raise ResourceError("%s: unknown format %r for %r" % (manifest_path, fmt, key))
        expected = _EXPECTED_FORMAT.get(key, "wordlist")
        if fmt != expected:
            raise ResourceError(
                "%s: %r must use format %r, found %r" % (manifest_path, key, expected, fmt)
            )
        entries[key] = value

    for key in REQUIRED:
        if key not in entries:
            raise ResourceError("%s: missing required resource %r" % (manifest_path, key))

    loaded = {}
    for key, value in entries.items():
        path = os.path.join(dir_path, value["file"])
        if not os.path.isfile(path):
            raise ResourceError("%s: file not found for %r: %s" % (manifest_path, key, path))
        loaded[key] = _LOADERS[value["format"]](path)

    missing = [key for key in OPTIONAL if key not in loaded]
    for key in missing:
        log.warning("resource bundle has no %r; dependent features will be absent", key)

    wordlists = WordLists({key: loaded[key] for key in WORDLIST_KEYS})
    return ResourceBundle(
        lexicon=loaded["pron_lexicon"],
        frequency=loaded["frequency"],
        wordlists=wordlists,
        psych=loaded.get("psych"),
        embeddings=loaded.get("embeddings"),
        missing=missing,
        fingerprint=_bundle_fingerprint(dir_path, manifest, entries),
    )


def default_resources_dir():
    """Directory of the demo resource set shipped with the package."""
    return os.path.join(os.path.dirname(__file__), "data", "resources")
