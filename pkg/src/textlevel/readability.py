"""Classic readability formulas.

Five whole-text formulas plus two computed over fixed-size word windows
(non-overlapping, remainder dropped, scores averaged). Formula constants
follow the published variants used here, including the subtractive
unfamiliar-word term in the Spache score; spache_canonical gives the
textbook form with the additive percentage term.
"""

FORMULA_NAMES = (
    "fog", "flesch_kincaid", "coleman_liau", "spache", "dale_chall",
    "ari", "forcast",
)

DEFAULT_WINDOW = 27

# FORCAST divides the monosyllable count by 10 at its native 150-word
# sample; the 27-word variant divides by 2. Other window sizes scale.
_FORCAST_DIVISORS = {27: 2.0, 150: 10.0}


class DocCounts:
    """Token-level tallies shared by every formula."""

    def __init__(self, sentences, wordlists=None):
        # sentences: lists of Token objects
        self.sentence_count = len(sentences)
        self.words = [t for sent in sentences for t in sent if t.is_word]
        self.word_count = len(self.words)
        self.letters = sum(t.graphemes for t in self.words)
        self.syllables = sum(t.syllables for t in self.words)
        self.complex_words = sum(1 for t in self.words if t.syllables >= 3)
        self.monosyllables = sum(1 for t in self.words if t.syllables == 1)
        if wordlists is not None:
            self.difficult = sum(
                1 for t in self.words if t.stem not in wordlists.dale_chall
            )
            self.unfamiliar = sum(
                1 for t in self.words if t.lower not in wordlists.spache
            )
        else:
            self.difficult = 0
            self.unfamiliar = 0
        # index of the last word of each sentence within self.words
        self.sentence_final = set()
        pos = -1
        for sent in sentences:
            n_words = sum(1 for t in sent if t.is_word)
            if n_words:
                pos += n_words
                self.sentence_final.add(pos)


def fog(counts):
    if counts.word_count == 0 or counts.sentence_count == 0:
        return 0.0
    wps = counts.word_count / counts.sentence_count
    pct_complex = 100.0 * counts.complex_words / counts.word_count
    return 0.4 * (wps + pct_complex)


def flesch_kincaid(counts):
    if counts.word_count == 0 or counts.sentence_count == 0:
        return 0.0
    wps = counts.word_count / counts.sentence_count
    spw = counts.syllables / counts.word_count
    return 206.835 - 1.015 * wps - 84.6 * spw


def ari(counts):
    if counts.word_count == 0 or counts.sentence_count == 0:
        return 0.0
    return (
        4.71 * (counts.letters / counts.word_count)
        + 0.5 * (counts.word_count / counts.sentence_count)
        - 21.43
    )


def dale_chall(counts):
    if counts.word_count == 0 or counts.sentence_count == 0:
        return 0.0
    pct_difficult = 100.0 * counts.difficult / counts.word_count
    score = 0.1579 * pct_difficult + 0.0496 * (
        counts.word_count / counts.sentence_count
    )
    if pct_difficult > 5.0:
        score += 3.6365
    return score


def spache(counts):
    if counts.word_count == 0 or counts.sentence_count == 0:
        return 0.0
    return (
        0.121 * (counts.word_count / counts.sentence_count)
        - 0.082 * (counts.unfamiliar / counts.word_count)
        + 0.659
    )


def spache_canonical(counts):
    """Textbook revised Spache: additive percentage of unfamiliar words."""
    if counts.word_count == 0 or counts.sentence_count == 0:
        return 0.0
    return (
        0.121 * (counts.word_count / counts.sentence_count)
        + 0.082 * (100.0 * counts.unfamiliar / counts.word_count)
        + 0.659
    )


def _windows(counts, window):
    for start in range(0, counts.word_count - window + 1, window):
        yield start, counts.words[start : start + window]


def coleman_liau(counts, window=DEFAULT_WINDOW):
    """Mean windowed Coleman-Liau score; absent for short texts."""
    if counts.word_count < window:
        return 0.0, True
    scores = []
    for start, words in _windows(counts, window):
        letters = sum(t.graphemes for t in words)
        sent_ends = sum(
            1 for i in range(start, start + window) if i in counts.sentence_final
        )
        big_l = letters / window * 100.0
        big_s = sent_ends / window * 100.0
        scores.append(0.0588 * big_l - 0.296 * big_s - 15.8)
    return sum(scores) / len(scores), False


def _forcast_divisor(window):
    got = _FORCAST_DIVISORS.get(window)
    if got is not None:
        return got
    return 10.0 * window / 150.0


def forcast(counts, window=DEFAULT_WINDOW):
    """Mean windowed FORCAST score; absent for short texts."""
    if counts.word_count < window:
        return 0.0, True
    divisor = _forcast_divisor(window)
    scores = []
    for _, words in _windows(counts, window):
        mono = sum(1 for t in words if t.syllables == 1)
        scores.append(20.0 - mono / divisor)
    return sum(scores) / len(scores), False


def all_formulas(sentences, wordlists, window=DEFAULT_WINDOW,
                 canonical_spache=False):
    """All seven scores for one document.

    Returns ({name: value}, {name: absent}) where only the windowed
    formulas can be absent.
    """
    counts = DocCounts(sentences, wordlists)
    cl, cl_absent = coleman_liau(counts, window)
    fc, fc_absent = forcast(counts, window)
    values = {
        "fog": fog(counts),
        "flesch_kincaid": flesch_kincaid(counts),
        "coleman_liau": cl,
        "spache": spache_canonical(counts) if canonical_spache else spache(counts),
        "dale_chall": dale_chall(counts),
        "ari": ari(counts),
        "forcast": fc,
    }
    absent = {name: False for name in FORMULA_NAMES}
    absent["coleman_liau"] = cl_absent
    absent["forcast"] = fc_absent
    return values, absent
