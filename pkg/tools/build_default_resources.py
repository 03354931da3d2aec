#!/usr/bin/env python3
"""Build the demo resource bundle and default tagger model committed under
src/textlevel/data/.

The bundle is self-consistent with the synthetic corpus generator: every
surface the generator can emit is ranked in the frequency table, common
vocabulary sits at ranks 1..3000 (padded with filler entries that are never
generated), and the rare pseudo-words start at rank 3001 so sophistication
thresholds behave the way they do with a real frequency list.

Rerunning this script always reproduces identical bytes.
"""

import csv
import json
import os
import random

from textlevel import porter, synthgen, vocab
from textlevel.tagging import PerceptronTagger

DATA_DIR = os.path.join(
    os.path.dirname(os.path.dirname(os.path.abspath(__file__))),
    "src", "textlevel", "data",
)
RES_DIR = os.path.join(DATA_DIR, "resources")

COMMON_BLOCK = 3000  # highest rank of the common region
VEC_DIM = 50


# ---------------------------------------------------------------- g2p

_DIGRAPHS = {
    "ch": ("CH",), "sh": ("SH",), "th": ("TH",), "ph": ("F",),
    "wh": ("W",), "ck": ("K",), "ng": ("NG",), "qu": ("K", "W"),
    "ee": ("IY",), "ea": ("IY",), "oo": ("UW",), "ou": ("AW",),
    "ow": ("AW",), "ai": ("EY",), "ay": ("EY",), "oa": ("OW",),
    "oi": ("OY",), "oy": ("OY",), "au": ("AO",), "aw": ("AO",),
    "ue": ("UW",), "ui": ("UW",),
}

_CONSONANTS = {
    "b": "B", "d": "D", "f": "F", "g": "G", "h": "HH", "j": "JH",
    "k": "K", "l": "L", "m": "M", "n": "N", "p": "P", "q": "K",
    "r": "R", "s": "S", "t": "T", "v": "V", "w": "W", "z": "Z",
}

_VOWEL_LETTER = {"a": "AE", "e": "EH", "i": "IH", "o": "AA", "u": "AH",
                 "y": "IH"}

_VOWEL_PHONES = frozenset(
    ("AA", "AE", "AH", "AO", "AW", "AY", "EH", "ER", "EY",
     "IH", "IY", "OW", "OY", "UH", "UW")
)


def g2p(word):
    """Letter-rule grapheme-to-phoneme conversion, ARPAbet-style.

    First vowel gets primary stress, the rest are unstressed. Rough, but
    deterministic and syllable counts line up with the vowel-group
    heuristic closely enough for demo purposes.
    """
    low = "".join(c for c in word.lower() if c.isalpha())
    if not low:
        return None
    stop = len(low)
    vowels = "aeiouy"
    # silent final e / ed, mirroring the syllable fallback heuristic
    if (
        len(low) >= 3
        and low.endswith("e")
        and low[-2] not in vowels
        and any(c in vowels for c in low[:-2])
        and not (low.endswith("le") and low[-3] not in "aeiou")
    ):
        stop -= 1
    elif (
        len(low) >= 4
        and low.endswith("ed")
        and low[-3] not in "aeiouytd"
        and any(c in vowels for c in low[:-2])
    ):
        stop -= 2
        low = low[:stop] + "d"
        stop += 1

    phones = []
    i = 0
    prev_letter = ""
    while i < stop:
        pair = low[i:i + 2]
        if i + 1 < stop and pair in _DIGRAPHS:
            phones.extend(_DIGRAPHS[pair])
            prev_letter = pair[-1]
            i += 2
            continue
        ch = low[i]
        if ch == prev_letter and ch not in vowels:
            i += 1
            continue
        if ch == "c":
            phones.append("S" if low[i + 1:i + 2] in ("e", "i", "y") else "K")
        elif ch == "x":
            phones.extend(("K", "S"))
        elif ch == "y":
            if i == 0:
                phones.append("Y")
            else:
                phones.append("IY" if i == stop - 1 else "IH")
        elif ch in _VOWEL_LETTER:
            phones.append(_VOWEL_LETTER[ch])
        elif ch in _CONSONANTS:
            phones.append(_CONSONANTS[ch])
        prev_letter = ch
        i += 1

    if not any(p in _VOWEL_PHONES for p in phones):
        phones.append("AH")
    out = []
    stressed = False
    for p in phones:
        if p in _VOWEL_PHONES:
            out.append(p + ("0" if stressed else "1"))
            stressed = True
        else:
            out.append(p)
    return out


# ------------------------------------------------------ word inventory

def _filler_words(count):
    """Padding entries for the frequency table.

    They start with 'x' so they can never collide with the real or the
    pseudo vocabulary, and the generator never emits them.
    """
    cons = "bcdfghklmnprstvz"
    vows = "aeiou"
    out = []
    i = 0
    while len(out) < count:
        a, rest = divmod(i, len(cons) * len(vows) * len(cons))
        b, rest2 = divmod(rest, len(vows) * len(cons))
        c, d = divmod(rest2, len(cons))
        out.append("x" + vows[a] + cons[b] + vows[c] + cons[d])
        i += 1
    return out


def _rare_surfaces():
    flat = []
    for entries in vocab.rare_inventory().values():
        for entry in entries:
            if isinstance(entry, tuple):
                flat.extend(entry)
            else:
                flat.append(entry)
    return flat


def build_rank_order():
    ordered = []
    seen = set()

    def push(w):
        if w and w not in seen:
            seen.add(w)
            ordered.append(w)

    for s in vocab.common_surfaces():
        push(s)
        push(porter.stem(s))
    n_common = len(ordered)
    if n_common > COMMON_BLOCK:
        raise SystemExit(
            "common region overflow: %d > %d" % (n_common, COMMON_BLOCK)
        )
    for f in _filler_words(COMMON_BLOCK - n_common):
        push(f)
    assert len(ordered) == COMMON_BLOCK
    for r in _rare_surfaces():
        push(r)
        push(porter.stem(r))
    return ordered, n_common


# ------------------------------------------------------------ writers

def write_wordfreq(path, ordered):
    rows = []
    prev = None
    for rank, word in enumerate(ordered, start=1):
        freq = round(1e7 / rank)
        if prev is not None and freq >= prev:
            freq = prev - 1
        if freq <= 0:
            raise SystemExit("frequency underflow at rank %d" % rank)
        rows.append((rank, word, freq))
        prev = freq
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(("rank", "word", "frequency"))
        w.writerows(rows)


def write_pron(path, words):
    lines = []
    for word in words:
        phones = g2p(word)
        if phones:
            lines.append(word.upper() + "  " + " ".join(phones))
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def write_wordlist(path, entries, comment=None):
    with open(path, "w", encoding="utf-8") as fh:
        if comment:
            fh.write("# %s\n" % comment)
        for e in entries:
            fh.write(e + "\n")


def _psych_row(rng):
    return {
        "kfwf": "%.2f" % rng.uniform(1.0, 1500.0),
        "kfncat": str(rng.randint(1, 17)),
        "kfns": str(rng.randint(1, 400)),
        "tl_freq": "%.2f" % rng.uniform(1.0, 2.5),
        "brown_freq": str(rng.randint(1, 1200)),
        "fam": str(rng.randint(100, 657)),
        "conc": str(rng.randint(158, 670)),
        "imag": str(rng.randint(129, 669)),
        "meanc": str(rng.randint(127, 667)),
        "meanp": str(rng.randint(192, 867)),
        "aoa": str(rng.randint(125, 694)),
    }


def write_psych(path):
    """Partial-coverage norms: most common words, a minority of the rare
    ones, occasional blank cells. Coverage gaps are part of the design."""
    from textlevel.resources import PSYCH_NORMS

    rng = random.Random(77003)
    common = sorted(
        {n for n in vocab.NOUNS}
        | {vocab.noun_plural(n) for n in vocab.NOUNS if n not in vocab.UNCOUNTABLE}
        | set(vocab.ADJECTIVES)
        | {b for b in vocab.REGULAR_VERBS}
    )
    rare = sorted(
        {s for pair in vocab.rare_inventory()["noun"] for s in pair}
        | set(vocab.rare_inventory()["adj"])
    )
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(("word",) + PSYCH_NORMS)
        for word in common:
            if rng.random() >= 0.85:
                continue
            row = _psych_row(rng)
            cells = [row[k] if rng.random() >= 0.08 else "" for k in PSYCH_NORMS]
            w.writerow([word] + cells)
        for word in rare:
            if rng.random() >= 0.40:
                continue
            row = _psych_row(rng)
            cells = [row[k] if rng.random() >= 0.15 else "" for k in PSYCH_NORMS]
            w.writerow([word] + cells)


def write_vectors(path):
    rng = random.Random(91261)
    words = list(vocab.common_surfaces())
    seen = set(words)
    for name in sorted(vocab.CONNECTORS):
        for part in name.split():
            if part not in seen:
                seen.add(part)
                words.append(part)
    with open(path, "w", encoding="utf-8") as fh:
        for word in words:
            comps = ["%.4f" % rng.uniform(-1.0, 1.0) for _ in range(VEC_DIM)]
            fh.write(word + " " + " ".join(comps) + "\n")


def build_bundle():
    os.makedirs(RES_DIR, exist_ok=True)
    ordered, n_common = build_rank_order()
    print("rank order: %d entries (%d common, fillers to %d, %d rare)"
          % (len(ordered), n_common, COMMON_BLOCK, len(ordered) - COMMON_BLOCK))

    write_wordfreq(os.path.join(RES_DIR, "wordfreq.csv"), ordered)
    pron_words = [w for w in ordered if not w.startswith("x")]
    write_pron(os.path.join(RES_DIR, "pron.txt"), pron_words)
    write_psych(os.path.join(RES_DIR, "psych.csv"))
    write_vectors(os.path.join(RES_DIR, "vectors.txt"))

    common = vocab.common_surfaces()
    write_wordlist(os.path.join(RES_DIR, "stopwords.txt"),
                   sorted(vocab.STOPWORDS))
    write_wordlist(os.path.join(RES_DIR, "frequent_verbs.txt"),
                   vocab.verb_lemmas())
    write_wordlist(os.path.join(RES_DIR, "spache.txt"), common,
                   comment="easy-word list for the spache formula")
    dale = list(common)
    seen = set(dale)
    for s in common:
        st = porter.stem(s)
        if st not in seen:
            seen.add(st)
            dale.append(st)
    write_wordlist(os.path.join(RES_DIR, "dale_chall.txt"), dale,
                   comment="familiar words, surface forms plus stems")
    write_wordlist(os.path.join(RES_DIR, "connectors.txt"),
                   sorted(vocab.CONNECTORS))
    write_wordlist(os.path.join(RES_DIR, "argumentative_connectors.txt"),
                   sorted(vocab.ARGUMENTATIVE))
    write_wordlist(os.path.join(RES_DIR, "prefixes.txt"),
                   sorted(vocab.PREFIXES))
    write_wordlist(os.path.join(RES_DIR, "suffixes.txt"),
                   sorted(vocab.SUFFIXES))

    manifest = {
        "pron_lexicon": {"file": "pron.txt", "format": "pron"},
        "frequency": {"file": "wordfreq.csv", "format": "freq_csv"},
        "stopwords": {"file": "stopwords.txt", "format": "wordlist"},
        "frequent_verbs": {"file": "frequent_verbs.txt", "format": "wordlist"},
        "spache": {"file": "spache.txt", "format": "wordlist"},
        "dale_chall": {"file": "dale_chall.txt", "format": "wordlist"},
        "connectors": {"file": "connectors.txt", "format": "wordlist"},
        "argumentative_connectors": {
            "file": "argumentative_connectors.txt", "format": "wordlist"},
        "prefixes": {"file": "prefixes.txt", "format": "wordlist"},
        "suffixes": {"file": "suffixes.txt", "format": "wordlist"},
        "psych": {"file": "psych.csv", "format": "psych_csv"},
        "embeddings": {"file": "vectors.txt", "format": "vectors"},
    }
    with open(os.path.join(RES_DIR, "manifest.json"), "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, indent=1, sort_keys=True)
        fh.write("\n")


# ------------------------------------------------------------- tagger

# A little breadth beyond the generator's output: first person, clitics,
# digits, proper names.
EXTRA_SENTENCES = [
    [("I", "PRP"), ("am", "VBP"), ("reading", "VBG"), ("a", "DT"),
     ("book", "NN"), (".", ".")],
    [("I", "PRP"), ("walked", "VBD"), ("to", "TO"), ("the", "DT"),
     ("school", "NN"), ("with", "IN"), ("my", "PRP$"), ("friend", "NN"),
     (".", ".")],
    [("It", "PRP"), ("'s", "VBZ"), ("a", "DT"), ("very", "RB"),
     ("big", "JJ"), ("house", "NN"), (".", ".")],
    [("They", "PRP"), ("do", "VBP"), ("n't", "RB"), ("like", "VB"),
     ("cold", "JJ"), ("water", "NN"), (".", ".")],
    [("We", "PRP"), ("'ll", "MD"), ("see", "VB"), ("the", "DT"),
     ("mountain", "NN"), ("tomorrow", "NN"), (".", ".")],
    [("She", "PRP"), ("'d", "VBD"), ("finished", "VBN"), ("the", "DT"),
     ("work", "NN"), ("before", "IN"), ("noon", "NN"), (".", ".")],
    [("Maria", "NNP"), ("and", "CC"), ("Tom", "NNP"), ("visited", "VBD"),
     ("London", "NNP"), ("in", "IN"), ("March", "NNP"), (".", ".")],
    [("The", "DT"), ("12", "CD"), ("students", "NNS"), ("read", "VBD"),
     ("3", "CD"), ("books", "NNS"), (".", ".")],
    [("He", "PRP"), ("is", "VBZ"), ("taller", "JJR"), ("than", "IN"),
     ("his", "PRP$"), ("brother", "NN"), (".", ".")],
    [("This", "DT"), ("is", "VBZ"), ("the", "DT"), ("most", "RBS"),
     ("interesting", "JJ"), ("story", "NN"), ("of", "IN"), ("all", "DT"),
     (".", ".")],
    [("Do", "VBP"), ("you", "PRP"), ("want", "VB"), ("more", "JJR"),
     ("rice", "NN"), ("?", ".")],
    [("There", "EX"), ("are", "VBP"), ("two", "CD"), ("birds", "NNS"),
     ("on", "IN"), ("the", "DT"), ("roof", "NN"), (".", ".")],
    [("Mr.", "NNP"), ("Smith", "NNP"), ("teaches", "VBZ"), ("history", "NN"),
     ("at", "IN"), ("the", "DT"), ("school", "NN"), (".", ".")],
    [("Not", "RB"), ("every", "DT"), ("plan", "NN"), ("works", "VBZ"),
     ("well", "RB"), (".", ".")],
    [("Run", "VB"), ("quickly", "RB"), ("and", "CC"), ("do", "VB"),
     ("not", "RB"), ("stop", "VB"), (".", ".")],
]


def build_tagger():
    gold = synthgen.tagged_sentences(20240915, 60)
    data = [([s for s, _ in sent], [t for _, t in sent]) for sent in gold]
    data += [([s for s, _ in sent], [t for _, t in sent])
             for sent in EXTRA_SENTENCES] * 4
    tagger = PerceptronTagger().train(data, epochs=8, seed=1)

    right = total = 0
    for words, tags in data:
        for got, want in zip(tagger.tag(words), tags):
            right += got == want
            total += 1
    print("tagger: %d sentences, training-set accuracy %.4f"
          % (len(data), right / total))
    out = os.path.join(DATA_DIR, "tagger_default.json")
    tagger.save(out)
    print("wrote %s (%d bytes)" % (out, os.path.getsize(out)))


if __name__ == "__main__":
    build_bundle()
    build_tagger()
