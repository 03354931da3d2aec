"""Word-level feature blocks: phonology, morphology, lexical density,
sophistication, and diversity.

Most functions take the token list of a whole document (word tokens mean
tokens with is_word set) plus aligned Penn tags where needed. Values that
are undefined for a document (no verbs, too short, empty POS class) come
back as (0.0, True) pairs where the boolean means "absent".
"""

import math

from .tenses import TENSE_NAMES

NOUN_TAGS = frozenset(("NN", "NNS", "NNP", "NNPS"))
ADJ_TAGS = frozenset(("JJ", "JJR", "JJS"))
ADV_TAGS = frozenset(("RB", "RBR", "RBS"))
VERB_TAGS = frozenset(("VB", "VBD", "VBG", "VBN", "VBP", "VBZ"))

V1_LEXICAL_TAGS = NOUN_TAGS | ADJ_TAGS | ADV_TAGS | VERB_TAGS | {"MD"}

# adverbs that do not end in -ly but still count as lexical adverbs
ADVERB_HOMOGRAPHS = frozenset(
    """
    fast late early hard high low long far near straight wrong right
    deep close fine daily weekly monthly yearly half further
    """.split()
)

MTLD_THRESHOLD = 0.72
MTLD_MIN_TOKENS = 30
HDD_SAMPLE = 42


def phonological_means(tokens):
    """Mean graphemes, phonemes, and syllables per word token."""
    words = [t for t in tokens if t.is_word]
    if not words:
        return 0.0, 0.0, 0.0
    n = len(words)
    return (
        sum(t.graphemes for t in words) / n,
        sum(t.phonemes for t in words) / n,
        sum(t.syllables for t in words) / n,
    )


def stem_diversity(tokens):
    """Distinct lemmas over word tokens."""
    words = [t for t in tokens if t.is_word]
    if not words:
        return 0.0
    return len({t.lemma for t in words}) / len(words)


def count_affixes(word, prefixes, suffixes, min_stem=3):
    """Greedy repeated strip of the longest matching affixes.

    Suffixes come off first, then prefixes; every strip must leave at
    least min_stem characters.
    """
    stem = word
    n_suf = 0
    n_pre = 0
    changed = True
    while changed:
        changed = False
        best = None
        for suf in suffixes:
            if stem.endswith(suf) and len(stem) - len(suf) >= min_stem:
                if best is None or len(suf) > len(best):
                    best = suf
        if best is not None:
            stem = stem[: -len(best)]
            n_suf += 1
            changed = True
    changed = True
    while changed:
        changed = False
        best = None
        for pre in prefixes:
            if stem.startswith(pre) and len(stem) - len(pre) >= min_stem:
                if best is None or len(pre) > len(best):
                    best = pre
        if best is not None:
            stem = stem[len(best):]
            n_pre += 1
            changed = True
    return n_pre, n_suf


def affix_means(tokens, prefixes, suffixes):
    """Mean prefix and suffix counts per word token."""
    words = [t for t in tokens if t.is_word]
    if not words:
        return 0.0, 0.0
    total_pre = 0
    total_suf = 0
    for t in words:
        p, s = count_affixes(t.lower, prefixes, suffixes)
        total_pre += p
        total_suf += s
    return total_pre / len(words), total_suf / len(words)


def pos_length_means(tokens, tags):
    """Mean grapheme length of nouns, adjectives, verbs, and adverbs.

    Returns {name: (value, absent)} with absent=True when the document has
    no token of that class.
    """
    groups = {"noun": NOUN_TAGS, "adj": ADJ_TAGS, "verb": VERB_TAGS, "adv": ADV_TAGS}
    out = {}
    for name, tagset in groups.items():
        lengths = [
            t.graphemes
            for t, tag in zip(tokens, tags)
            if t.is_word and tag in tagset
        ]
        if lengths:
            out[name] = (sum(lengths) / len(lengths), False)
        else:
            out[name] = (0.0, True)
    return out


def tense_rates(tense_counts, sentence_count):
    """Tense construction counts normalized by sentence count."""
    if sentence_count <= 0:
        return {name: 0.0 for name in TENSE_NAMES}
    return {
        name: tense_counts.get(name, 0) / sentence_count for name in TENSE_NAMES
    }


def lexical_density_v1(tokens, tags):
    """Lexical words (broad: verbs with modals, adverbs, adjectives,
    nouns) over word tokens."""
    words = [(t, tag) for t, tag in zip(tokens, tags) if t.is_word]
    if not words:
        return 0.0
    lexical = sum(1 for _, tag in words if tag in V1_LEXICAL_TAGS)
    return lexical / len(words)


def _v2_is_lexical(token, tag):
    if tag in NOUN_TAGS or tag in ADJ_TAGS:
        return True
    if tag in VERB_TAGS:
        return token.lemma not in ("be", "have")
    if tag in ADV_TAGS:
        return token.lower.endswith("ly") or token.lower in ADVERB_HOMOGRAPHS
    return False


def lexical_density_v2(tokens, tags):
    """Stricter lexical density: no modals, no be/have, and only -ly or
    adjective-homograph adverbs."""
    words = [(t, tag) for t, tag in zip(tokens, tags) if t.is_word]
    if not words:
        return 0.0
    lexical = sum(1 for t, tag in words if _v2_is_lexical(t, tag))
    return lexical / len(words)


def lexical_sophistication(tokens, tags, frequency, stopwords, frequent_verbs,
                           rare_rank=3000):
    """lexsph, cls, vsm, vsm_sq.

    lexsph: share of lexical words whose stem falls beyond rare_rank in
    the frequency table (or is missing from it).
    cls: mean table frequency of stemmed non-stopwords, with the table's
    unknown-word fallback for absent stems.
    vsm: sophisticated verbs (lemma outside the frequent-verb list) over
    verbs; vsm_sq scales by sqrt(2 * verbs). Both absent without verbs.
    """
    words = [(t, tag) for t, tag in zip(tokens, tags) if t.is_word]
    lexical = [(t, tag) for t, tag in words if tag in V1_LEXICAL_TAGS]
    if lexical:
        soph = 0
        for t, _ in lexical:
            rank = frequency.rank_of(t.stem)
            if rank is None:
                rank = frequency.rank_of(t.lower)
            if rank is None or rank > rare_rank:
                soph += 1
        lexsph = soph / len(lexical)
    else:
        lexsph = 0.0

    non_stop = [t for t, _ in words if t.lower not in stopwords]
    if non_stop:
        total = 0.0
        for t in non_stop:
            if t.stem in frequency:
                total += frequency.freq_of(t.stem)
            else:
                total += frequency.freq_of(t.lower)
        cls = total / len(non_stop)
    else:
        cls = 0.0

    verbs = [t for t, tag in words if tag in VERB_TAGS]
    if verbs:
        soph_verbs = sum(1 for t in verbs if t.lemma not in frequent_verbs)
        vsm = (soph_verbs / len(verbs), False)
        vsm_sq = (soph_verbs / math.sqrt(2 * len(verbs)), False)
    else:
        vsm = (0.0, True)
        vsm_sq = (0.0, True)
    return lexsph, cls, vsm, vsm_sq


def diversity_basic(tokens):
    """ndw, ttr, gttr, cttr with the two root-scaled variants x100."""
    words = [t.lower for t in tokens if t.is_word]
    n = len(words)
    if n == 0:
        return 0, 0.0, 0.0, 0.0
    ndw = len(set(words))
    ttr = ndw / n * 100.0
    gttr = ndw / math.sqrt(n) * 100.0
    cttr = ndw / math.sqrt(2.0 * n) * 100.0
    return ndw, ttr, gttr, cttr


def _mtld_pass(words, threshold):
    factors = 0.0
    types = set()
    count = 0
    for w in words:
        count += 1
        types.add(w)
        if len(types) / count <= threshold:
            factors += 1.0
            types = set()
            count = 0
    if count > 0:
        ttr = len(types) / count
        factors += (1.0 - ttr) / (1.0 - threshold)
    return factors


def mtld(tokens, threshold=MTLD_THRESHOLD, min_tokens=MTLD_MIN_TOKENS):
    """Mean length of sequential type-token strings staying above the
    TTR threshold; average of a forward and a backward pass.

    Returns (value, absent). Below min_tokens the value is absent. When a
    pass closes no factors at all the pass value is the token count.
    """
    words = [t.lower for t in tokens if t.is_word]
    n = len(words)
    if n < min_tokens:
        return 0.0, True
    values = []
    for seq in (words, words[::-1]):
        factors = _mtld_pass(seq, threshold)
        values.append(n / factors if factors > 0 else float(n))
    return (values[0] + values[1]) / 2.0, False


def hdd(tokens, sample_size=HDD_SAMPLE):
    """Expected sample TTR under hypergeometric draws of sample_size.

    Each type contributes (1 - P(absent from the sample)) / sample_size.
    Absent for documents shorter than the sample size.
    """
    words = [t.lower for t in tokens if t.is_word]
    n = len(words)
    if n < sample_size:
        return 0.0, True
    freqs = {}
    for w in words:
        freqs[w] = freqs.get(w, 0) + 1
    denom = math.comb(n, sample_size)
    total = 0.0
    for f in freqs.values():
        p_zero = math.comb(n - f, sample_size) / denom if n - f >= sample_size else 0.0
        total += (1.0 - p_zero) / sample_size
    return total, False
