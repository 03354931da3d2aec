"""Synthetic graded-corpus generator.

Produces three difficulty levels of English-like text from tagged sentence
templates. Level 1 is short simple clauses, level 2 adds coordination,
subordination and perfect/future forms, level 3 stacks clauses and the
longer tense constructions. Rare pseudo-words (beyond the frequency list)
are substituted into content slots at a level-dependent rate, and discourse
connectors are prepended at a level-dependent rate, so every feature family
has signal that rises with the level.

Everything is driven by a single random.Random(seed); output is
byte-for-byte reproducible for a given (seed, per_level).
"""

import os
import random

from . import vocab

# Slot codes used in templates. Literals are (surface, tag) tuples and pass
# through untouched.
#   DET/DETP   singular / plural determiner        -> DT
#   N/NS       singular / plural noun              -> NN / NNS
#   VB VZ VBP  base / 3sg / plural present verb    -> VB / VBZ / VBP
#   VD VN VG   past / participle / gerund          -> VBD / VBN / VBG
#   ADJ ADV    adjective / adverb                  -> JJ / RB
#   PREP       preposition                         -> IN
#   PRP PRPP   singular / plural subject pronoun   -> PRP
#   POSS       possessive determiner               -> PRP$

_DET_SG = ("the", "a", "this", "that", "every", "each")
_DET_PL = ("the", "these", "those", "some")
_POSS = ("his", "her", "its", "their", "our")
# prepositions that double as subordinators would skew the clause counts
_PREPS = tuple(p for p in vocab.PREPOSITIONS if p not in vocab.SUBORDINATORS)

_NOUNS = tuple(
    (n, vocab.noun_plural(n)) for n in vocab.NOUNS if n not in vocab.UNCOUNTABLE
)
# (base, 3sg, past, participle, gerund); bases without generated forms
# (i.e. "be") are handled by template literals instead
_VERBS = tuple(
    (b,) + vocab.verb_forms(b)
    for b in sorted(set(vocab.REGULAR_VERBS) | set(vocab.IRREGULAR_VERBS))
    if vocab.IRREGULAR_VERBS.get(b, "") is not None
)

_RARE = vocab.rare_inventory()
_RARE_NOUNS = tuple(_RARE["noun"])
# pad rare verbs to the common 5-tuple layout (participle == past)
_RARE_VERBS = tuple((b, s3, pa, pa, g) for b, s3, pa, g in _RARE["verb"])
_RARE_ADJS = tuple(_RARE["adj"])
_RARE_ADVS = tuple(_RARE["adv"])

_VERB_FORM = {"VB": 0, "VBP": 0, "VZ": 1, "VD": 2, "VN": 3, "VG": 4}
_VERB_TAG = {"VB": "VB", "VBP": "VBP", "VZ": "VBZ", "VD": "VBD",
             "VN": "VBN", "VG": "VBG"}

# ins_adj/ins_adv: chance of an extra adjective before a noun slot or an
# adverb before a finite-verb/gerund slot. They push every level's tag
# fourgram inventory past the profile truncation cap, which keeps the
# level profiles the same size and the out-of-profile penalty comparable.
LEVEL_SPECS = {
    1: {"rare_rate": 0.02, "connector_rate": 0.05, "question_rate": 0.05,
        "ins_adj": 0.45, "ins_adv": 0.35,
        "pool": {"noun": 8, "verb": 6, "adj": 5, "adv": 4}},
    2: {"rare_rate": 0.10, "connector_rate": 0.25, "question_rate": 0.08,
        "ins_adj": 0.45, "ins_adv": 0.35,
        "pool": {"noun": 16, "verb": 10, "adj": 8, "adv": 6}},
    3: {"rare_rate": 0.25, "connector_rate": 0.45, "question_rate": 0.08,
        "ins_adj": 0.45, "ins_adv": 0.35,
        "pool": {"noun": 26, "verb": 14, "adj": 12, "adv": 8}},
}

# Connector pools widen with level; level 3 draws from the full set so the
# argumentative subset appears mostly in hard documents.
CONNECTOR_POOLS = {
    1: ("also", "then", "finally"),
    2: ("also", "then", "finally", "however", "for example",
        "in addition", "therefore", "instead"),
    3: tuple(sorted(vocab.CONNECTORS)),
}

_COMMA = (",", ",")

# SUBJ/SUBJP/OBJ/OBJP are shape macros expanded at render time into one of
# several determiner/possessive/pronoun forms. The alternation multiplies
# the distinct tag sequences each template can produce.
TEMPLATES = {
    1: (
        ("SUBJ", "VZ", "OBJ"),
        ("SUBJ", "VD", "PREP", "OBJ"),
        ("SUBJ", "VZ", "DET", "ADJ", "N"),
        ("SUBJ", ("is", "VBZ"), "ADJ"),
        ("DET", "ADJ", "N", ("is", "VBZ"), "PREP", "OBJ"),
        ("SUBJ", ("is", "VBZ"), "VG", "OBJ"),
        ("SUBJP", "VBP", "OBJ", "ADV"),
        ("SUBJP", "VBP", "PREP", "OBJ"),
        ("SUBJ", ("can", "MD"), "VB", "OBJ"),
        ("SUBJ", "VD", "OBJ"),
        ("SUBJP", ("are", "VBP"), "ADJ"),
        ("SUBJ", ("was", "VBD"), "ADJ"),
        ("SUBJ", "VZ", "ADV"),
        ("SUBJP", "VD", "OBJ"),
        ("SUBJ", "VD", "PREP", "POSS", "N"),
    ),
    2: (
        ("SUBJ", "VD", "OBJ", ("because", "IN"),
         "PRP", "VD", "DET", "ADJ", "N"),
        ("DET", "ADJ", "N", "VZ", "OBJ", ("and", "CC"),
         "SUBJ", "VZ", "OBJ"),
        (("when", "WRB"), "SUBJ", "VD", "OBJ", _COMMA,
         "SUBJ", "VD", "ADV"),
        ("PRP", ("has", "VBZ"), "ADV", "VN", "DET", "ADJ", "N",
         "PREP", "OBJ"),
        ("SUBJ", ("will", "MD"), "VB", "OBJ",
         "PREP", "DET", "ADJ", "N"),
        ("SUBJP", ("were", "VBD"), "VG", "OBJP",
         ("while", "IN"), "SUBJ", "VD"),
        ("SUBJ", "VD", "OBJ", _COMMA, ("but", "CC"),
         "SUBJ", "VD", "DET", "ADJ", "N"),
        ("SUBJP", ("have", "VBP"), "VN", "DET", "ADJ", "N",
         "PREP", "OBJ", ("since", "IN"), "DET", "N"),
        ("DET", "N", "PREP", "DET", "N", "VD", "DET", "ADJ", "N", "ADV"),
    ),
    3: (
        (("although", "IN"), "DET", "ADJ", "N", ("had", "VBD"), "VN",
         "OBJ", _COMMA, "SUBJ", "VD", ("that", "IN"),
         "PRP", "VD", "DET", "ADJ", "N", "PREP", "OBJ"),
        ("DET", "N", ("which", "WDT"), "VZ", "DET", "ADJ", "N",
         ("has", "VBZ"), ("been", "VBN"), "VG", "OBJ",
         ("since", "IN"), "SUBJ", "VD", "DET", "ADJ", "N"),
        ("SUBJ", ("will", "MD"), ("have", "VB"), "VN",
         "DET", "ADJ", "N", ("before", "IN"), "SUBJ", "VZ",
         "OBJ", "PREP", "DET", "ADJ", "N"),
        (("while", "IN"), "SUBJ", ("was", "VBD"), "VG", "OBJ",
         _COMMA, "DET", "ADJ", "N", "VD", "PREP", "OBJ",
         ("and", "CC"), "VD", "DET", "ADJ", "N"),
        ("DET", "ADJ", "N", "VD", "OBJ", ("although", "IN"),
         "SUBJP", "VBP", ("that", "IN"), "SUBJ",
         ("is", "VBZ"), "ADV", "ADJ", "PREP", "OBJ"),
        (("if", "IN"), "SUBJ", "VZ", "DET", "ADJ", "N", _COMMA,
         "SUBJ", ("will", "MD"), "VB", "OBJ",
         "PREP", "DET", "ADJ", "N", "ADV"),
        ("SUBJ", "VD", "OBJ", ("to", "TO"), "VB",
         "DET", "ADJ", "N", ("while", "IN"), "SUBJP",
         ("were", "VBD"), "VG", "DETP", "ADJ", "NS"),
        (("since", "IN"), "SUBJ", ("has", "VBZ"), "VN", "OBJ",
         _COMMA, "SUBJP", ("have", "VBP"), ("been", "VBN"), "VG",
         "DETP", "ADJ", "NS", "PREP", "OBJ"),
        ("DET", "N", "PREP", "DET", "N", "VD", ("that", "IN"),
         "DET", "ADJ", "N", ("had", "VBD"), "ADV", "VN",
         "OBJ", "PREP", "DET", "ADJ", "N"),
        ("SUBJ", ("will", "MD"), ("be", "VB"), "VG", "DET", "ADJ", "N",
         ("when", "WRB"), "DET", "ADJ", "N", "VZ", "PREP",
         "DET", "ADJ", "N"),
        ("SUBJP", ("had", "VBD"), ("been", "VBN"), "VG",
         "PREP", "OBJ", ("before", "IN"), "SUBJ", "VD",
         "DET", "ADJ", "N", "ADV"),
    ),
}

QUESTIONS = {
    1: ((("is", "VBZ"), "SUBJ", "ADJ"),),
    2: ((("why", "WRB"), ("did", "VBD"), "SUBJ", "VB",
         "DET", "ADJ", "N"),),
    3: ((("what", "WP"), ("has", "VBZ"), "SUBJ", ("been", "VBN"),
         "VG", ("since", "IN"), "DET", "ADJ", "N"),),
}

# expansion weights lean toward full noun phrases
_MACROS = {
    "SUBJ": (("DET", "N"), ("DET", "N"), ("POSS", "N"), ("PRP",)),
    "SUBJP": (("DETP", "NS"), ("DETP", "NS"), ("POSS", "NS"), ("PRPP",)),
    "OBJ": (("DET", "N"), ("DET", "N"), ("POSS", "N"), ("PRPO",)),
    "OBJP": (("DETP", "NS"), ("DETP", "NS"), ("PRPO",)),
}


def _doc_pools(rng, level):
    sizes = LEVEL_SPECS[level]["pool"]
    return {
        "noun": rng.sample(_NOUNS, sizes["noun"]),
        "verb": rng.sample(_VERBS, sizes["verb"]),
        "adj": rng.sample(vocab.ADJECTIVES, sizes["adj"]),
        "adv": rng.sample(vocab.ADVERBS, sizes["adv"]),
    }


def _fill(code, pools, rng, rare_rate):
    if code == "DET":
        return (rng.choice(_DET_SG), "DT")
    if code == "DETP":
        return (rng.choice(_DET_PL), "DT")
    if code == "PRP":
        return (rng.choice(vocab.PRONOUNS_SG), "PRP")
    if code == "PRPP":
        return (rng.choice(vocab.PRONOUNS_PL), "PRP")
    if code == "PRPO":
        return (rng.choice(vocab.PRONOUNS_OBJ), "PRP")
    if code == "POSS":
        return (rng.choice(_POSS), "PRP$")
    if code == "PREP":
        return (rng.choice(_PREPS), "IN")
    rare = rng.random() < rare_rate
    if code == "N":
        pair = rng.choice(_RARE_NOUNS) if rare else rng.choice(pools["noun"])
        return (pair[0], "NN")
    if code == "NS":
        pair = rng.choice(_RARE_NOUNS) if rare else rng.choice(pools["noun"])
        return (pair[1], "NNS")
    if code in _VERB_FORM:
        forms = rng.choice(_RARE_VERBS) if rare else rng.choice(pools["verb"])
        return (forms[_VERB_FORM[code]], _VERB_TAG[code])
    if code == "ADJ":
        word = rng.choice(_RARE_ADJS) if rare else rng.choice(pools["adj"])
        return (word, "JJ")
    if code == "ADV":
        word = rng.choice(_RARE_ADVS) if rare else rng.choice(pools["adv"])
        return (word, "RB")
    raise ValueError("unknown slot code %r" % (code,))


_NOUN_SLOTS = ("N", "NS")
_INS_ADV_SLOTS = ("VZ", "VBP", "VD", "VG", "VN", "VB")


def _render(template, pools, rng, spec):
    rare_rate = spec["rare_rate"]
    slots = []
    for slot in template:
        if isinstance(slot, str) and slot in _MACROS:
            slots.extend(rng.choice(_MACROS[slot]))
        else:
            slots.append(slot)
    out = []
    for slot in slots:
        if isinstance(slot, tuple):
            out.append(slot)
            continue
        if slot in _NOUN_SLOTS and rng.random() < spec["ins_adj"]:
            out.append(_fill("ADJ", pools, rng, rare_rate))
            if rng.random() < 0.3:
                out.append(_fill("ADJ", pools, rng, rare_rate))
        elif slot in _INS_ADV_SLOTS and rng.random() < spec["ins_adv"]:
            out.append(_fill("ADV", pools, rng, rare_rate))
        out.append(_fill(slot, pools, rng, rare_rate))
    for i in range(len(out) - 1):
        if out[i][0] == "a" and out[i + 1][0][0] in "aeiou":
            out[i] = ("an", "DT")
    return out


def make_document(rng, level):
    """One document as a list of tagged sentences [(surface, tag), ...]."""
    spec = LEVEL_SPECS[level]
    pools = _doc_pools(rng, level)
    sentences = []
    for _ in range(rng.randint(10, 14)):
        if rng.random() < spec["question_rate"]:
            tmpl = QUESTIONS[level][rng.randrange(len(QUESTIONS[level]))]
            toks = _render(tmpl, pools, rng, spec)
            toks.append(("?", "."))
        else:
            tmpl = TEMPLATES[level][rng.randrange(len(TEMPLATES[level]))]
            toks = _render(tmpl, pools, rng, spec)
            if rng.random() < spec["connector_rate"]:
                name = rng.choice(CONNECTOR_POOLS[level])
                toks = list(vocab.CONNECTORS[name]) + [_COMMA] + toks
            toks.append((".", "."))
        first, tag = toks[0]
        toks[0] = (first[0].upper() + first[1:], tag)
        sentences.append(toks)
    return sentences


def render_text(sentences):
    """Detokenize: no space before punctuation, sentences joined by one
    space, trailing newline."""
    parts = []
    for sent in sentences:
        buf = []
        for surface, _ in sent:
            if buf and surface not in (",", ".", "?"):
                buf.append(" ")
            buf.append(surface)
        parts.append("".join(buf))
    return " ".join(parts) + "\n"


def tagged_sentences(seed, per_level, levels=(1, 2, 3)):
    """Gold-tagged sentence stream, mainly for tagger training."""
    rng = random.Random(seed)
    out = []
    for level in levels:
        for _ in range(per_level):
            out.extend(make_document(rng, level))
    return out


def write_corpus(out_dir, seed, per_level, levels=(1, 2, 3)):
    """Write level<k>/ directories of .txt files; returns written paths."""
    if per_level < 1:
        raise ValueError("per_level must be at least 1")
    rng = random.Random(seed)
    paths = []
    for level in levels:
        sub = os.path.join(out_dir, "level%d" % level)
        os.makedirs(sub, exist_ok=True)
        for i in range(per_level):
            text = render_text(make_document(rng, level))
            path = os.path.join(sub, "l%d_doc%03d.txt" % (level, i))
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(text)
            paths.append(path)
    return paths
