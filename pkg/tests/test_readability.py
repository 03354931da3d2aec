"""Formula checks against an independently written tally script.

The oracle below recomputes every score from nothing but token lists,
sharing no code with the module under test.
"""

import math
import random

import pytest

from textlevel import readability, synthgen, textpipe
from textlevel.readability import DocCounts, all_formulas
from textlevel.textpipe import analyze_token, split_sentences, tokenize


def analyzed_sentences(text, bundle=None):
    lexicon = bundle.lexicon if bundle is not None else None
    out = []
    for span in split_sentences(text):
        toks = tokenize(span.raw)
        for t in toks:
            analyze_token(t, lexicon=lexicon)
        out.append(toks)
    return out


# ------------------------------------------------------------- oracle

def oracle_scores(sentences, dale_chall_set, spache_set, window):
    """Brute-force recomputation of all seven formulas."""
    words = []
    ends = []
    for sent in sentences:
        for t in sent:
            if t.is_word:
                words.append(t)
        if any(t.is_word for t in sent):
            ends.append(len(words) - 1)
    n = len(words)
    s = len(sentences)
    out = {}
    if n == 0 or s == 0:
        return {name: 0.0 for name in readability.FORMULA_NAMES}

    complex_ratio = sum(1 for t in words if t.syllables >= 3) / n
    out["fog"] = 0.4 * (n / s + 100.0 * complex_ratio)
    out["flesch_kincaid"] = (206.835 - 1.015 * (n / s)
                             - 84.6 * sum(t.syllables for t in words) / n)
    out["ari"] = (4.71 * sum(t.graphemes for t in words) / n
                  + 0.5 * n / s - 21.43)
    pct_hard = 100.0 * sum(1 for t in words
                           if t.stem not in dale_chall_set) / n
    out["dale_chall"] = 0.1579 * pct_hard + 0.0496 * n / s
    if pct_hard > 5.0:
        out["dale_chall"] += 3.6365
    unfam = sum(1 for t in words if t.lower not in spache_set)
    out["spache"] = 0.121 * n / s - 0.082 * unfam / n + 0.659

    cl_scores, fc_scores = [], []
    for start in range(0, n - window + 1, window):
        chunk = words[start:start + window]
        letters = sum(t.graphemes for t in chunk)
        n_ends = sum(1 for e in ends if start <= e < start + window)
        cl_scores.append(0.0588 * letters / window * 100.0
                         - 0.296 * n_ends / window * 100.0 - 15.8)
        mono = sum(1 for t in chunk if t.syllables == 1)
        # published divisors at the two documented sample sizes; linear
        # scaling elsewhere
        if window == 27:
            div = 2.0
        elif window == 150:
            div = 10.0
        else:
            div = 10.0 * window / 150.0
        fc_scores.append(20.0 - mono / div)
    out["coleman_liau"] = (sum(cl_scores) / len(cl_scores)
                           if cl_scores else 0.0)
    out["forcast"] = sum(fc_scores) / len(fc_scores) if fc_scores else 0.0
    return out


class TestAgainstOracle:
    def test_synthetic_documents(self, bundle):
        rng = random.Random(1234)
        for level in (1, 2, 3):
            for _ in range(5):
                doc = synthgen.make_document(rng, level)
                sentences = analyzed_sentences(
                    synthgen.render_text(doc), bundle)
                values, absent = all_formulas(sentences, bundle.wordlists)
                want = oracle_scores(sentences, bundle.wordlists.dale_chall,
                                     bundle.wordlists.spache,
                                     readability.DEFAULT_WINDOW)
                for name in readability.FORMULA_NAMES:
                    if absent[name]:
                        continue
                    scale = max(1.0, abs(want[name]))
                    assert abs(values[name] - want[name]) / scale <= 1e-9, name

    def test_nonstandard_window(self, bundle):
        rng = random.Random(99)
        doc = synthgen.make_document(rng, 3)
        sentences = analyzed_sentences(synthgen.render_text(doc), bundle)
        values, absent = all_formulas(sentences, bundle.wordlists, window=15)
        assert not absent["forcast"]
        want = oracle_scores(sentences, bundle.wordlists.dale_chall,
                             bundle.wordlists.spache, 15)
        assert abs(values["forcast"] - want["forcast"]) <= 1e-9
        assert abs(values["coleman_liau"] - want["coleman_liau"]) <= 1e-9


class TestHandValues:
    def make(self, text, bundle):
        return DocCounts(analyzed_sentences(text, bundle), bundle.wordlists)

    def test_fog_single_sentence(self, bundle):
        # 5 words, one 3+-syllable word -> 0.4 * (5 + 20)
        counts = self.make("The animal sat down there.", bundle)
        assert counts.word_count == 5
        assert counts.complex_words == 1
        assert abs(readability.fog(counts) - 0.4 * (5 + 20.0)) < 1e-12

    def test_flesch_kincaid_formula(self, bundle):
        counts = self.make("The dog sat.", bundle)
        want = 206.835 - 1.015 * 3 - 84.6 * (counts.syllables / 3)
        assert abs(readability.flesch_kincaid(counts) - want) < 1e-12

    def test_ari_letters(self, bundle):
        counts = self.make("A cat sat.", bundle)
        assert counts.letters == 1 + 3 + 3
        want = 4.71 * (7 / 3) + 0.5 * 3 - 21.43
        assert abs(readability.ari(counts) - want) < 1e-12

    def test_empty_text_scores_zero(self):
        counts = DocCounts([])
        for fn in (readability.fog, readability.flesch_kincaid,
                   readability.ari, readability.dale_chall,
                   readability.spache):
            assert fn(counts) == 0.0

    def test_spache_canonical_additive(self, bundle):
        counts = self.make("The blavtion miffled a thorpent.", bundle)
        sub = readability.spache(counts)
        add = readability.spache_canonical(counts)
        assert add > sub


class TestWindows:
    def test_forcast_divisor_table(self):
        assert readability._forcast_divisor(27) == 2.0
        assert readability._forcast_divisor(150) == 10.0
        assert readability._forcast_divisor(75) == 5.0
        assert abs(readability._forcast_divisor(30) - 2.0) < 1e-12

    def test_short_text_flags_windowed_formulas_absent(self, bundle):
        sentences = analyzed_sentences("The dog sat down.", bundle)
        _, absent = all_formulas(sentences, bundle.wordlists)
        assert absent["coleman_liau"] and absent["forcast"]
        assert not absent["fog"]

    def test_remainder_words_dropped(self, bundle):
        # 30 words, window 27: exactly one window; the last 3 words must
        # not affect the score
        base = "word " * 27
        extra = "supplementary vocabulary items"
        a = analyzed_sentences(base.strip() + ".", bundle)
        b = analyzed_sentences((base + extra).strip() + ".", bundle)
        fa, _ = readability.forcast(DocCounts(a))
        fb, _ = readability.forcast(DocCounts(b))
        assert fa == fb

    def test_monosyllable_only_forcast(self, bundle):
        text = ("the cat sat on the mat " * 5).strip() + "."
        counts = self.make_counts(text, bundle)
        score, absent = readability.forcast(counts, window=27)
        assert not absent
        assert abs(score - (20.0 - 27 / 2.0)) < 1e-12

    @staticmethod
    def make_counts(text, bundle):
        return DocCounts(analyzed_sentences(text, bundle), bundle.wordlists)


class TestRuntime:
    def test_twenty_five_documents_fast(self, bundle):
        import time
        rng = random.Random(20240917)
        docs = [synthgen.make_document(rng, 1 + i % 3) for i in range(25)]
        start = time.perf_counter()
        for doc in docs:
            sentences = analyzed_sentences(synthgen.render_text(doc), bundle)
            all_formulas(sentences, bundle.wordlists)
        assert time.perf_counter() - start < 5.0
