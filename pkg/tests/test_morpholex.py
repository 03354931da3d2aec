"""Word-level feature blocks: diversity oracles, density, sophistication,
affix stripping, and the per-POS length means.

The MTLD check re-walks the factor procedure step by step in an
independently written loop; the HD-D check recomputes every type's
inclusion probability with scipy's hypergeometric distribution. Neither
oracle shares code with the module under test.
"""

import math
import random
from collections import Counter

import pytest
from scipy.stats import hypergeom

from textlevel import morpholex, textpipe
from textlevel.textpipe import Token


def W(s, **kw):
    # bare word token; most diversity code only reads .lower / .is_word
    return Token(surface=s, lower=s.lower(), is_word=True, graphemes=len(s), **kw)


def PUNCT(s):
    return Token(surface=s, lower=s, is_word=False, graphemes=0)


def rel_close(got, want, tol=1e-9):
    assert abs(got - want) <= tol * max(1.0, abs(want)), (got, want)


# ---------------------------------------------------------------- oracles

def mtld_oracle(words, threshold=0.72):
    """Step-through re-derivation: count full factors along the sequence,
    score the tail as a partial factor, average forward and backward."""

    def walk(seq):
        factors = 0.0
        pos = 0
        while pos < len(seq):
            seen = {}
            used = 0
            closed = False
            while pos < len(seq):
                seen[seq[pos]] = True
                used += 1
                pos += 1
                if len(seen) / used <= threshold:
                    factors += 1.0
                    closed = True
                    break
            if not closed and used:
                tail_ttr = len(seen) / used
                factors += (1.0 - tail_ttr) / (1.0 - threshold)
        if factors == 0.0:
            return float(len(seq))
        return len(seq) / factors

    return (walk(list(words)) + walk(list(reversed(words)))) / 2.0


def hdd_oracle(words, sample=42):
    n = len(words)
    total = 0.0
    for f in Counter(words).values():
        total += (1.0 - hypergeom.pmf(0, n, f, sample)) / sample
    return total


def _random_word_lists():
    rng = random.Random(777)
    shapes = [
        (30, 2), (30, 30), (35, 5), (42, 1), (42, 2), (42, 42),
        (45, 8), (50, 3), (55, 12), (60, 6), (60, 40), (48, 20),
    ]
    out = []
    for n, v in shapes:
        words = ["w%d" % rng.randrange(v) for _ in range(n)]
        out.append(("rand_n%d_v%d" % (n, v), words))
    return out


DERIVED = [
    ("aba_x10", ["a", "b", "a"] * 10),
    ("same_42", ["x"] * 42),
    ("two_types_21_each", ["x"] * 21 + ["y"] * 21),
    ("distinct_42", ["t%d" % i for i in range(42)]),
]

SWEEP = DERIVED + _random_word_lists()


class TestMtldOracle:
    @pytest.mark.parametrize("name,words", SWEEP, ids=[s[0] for s in SWEEP])
    def test_matches_step_through(self, name, words):
        value, absent = morpholex.mtld([W(w) for w in words])
        assert not absent
        rel_close(value, mtld_oracle(words))

    def test_aba_repeated_is_three(self):
        # each "a b a" block closes one factor in both directions:
        # 30 tokens / 10 factors = 3, same backward
        value, absent = morpholex.mtld([W(w) for w in ["a", "b", "a"] * 10])
        assert not absent
        assert value == pytest.approx(3.0, abs=1e-12)

    def test_all_identical_closes_every_two_tokens(self):
        value, absent = morpholex.mtld([W("x")] * 42)
        assert not absent
        assert value == pytest.approx(2.0, abs=1e-12)

    def test_all_distinct_never_closes(self):
        # ttr stays at 1.0, the partial factor is zero, so the pass
        # falls back to the token count
        words = ["t%d" % i for i in range(30)]
        value, absent = morpholex.mtld([W(w) for w in words])
        assert not absent
        assert value == pytest.approx(30.0, abs=1e-12)

    def test_short_text_absent(self):
        value, absent = morpholex.mtld([W("x")] * 29)
        assert absent and value == 0.0

    def test_punctuation_ignored(self):
        toks = [W(w) for w in ["a", "b", "a"] * 10]
        spiked = []
        for t in toks:
            spiked.append(t)
            spiked.append(PUNCT(","))
        value, absent = morpholex.mtld(spiked)
        assert not absent
        assert value == pytest.approx(3.0, abs=1e-12)

    def test_real_text_round_trip(self):
        text = (
            "The small boat drifted past the old harbor wall while gulls "
            "circled overhead. Fishermen mended their nets on the quay and "
            "talked quietly about the coming storm season near the market."
        )
        tokens = textpipe.tokenize(text)
        words = [t.lower for t in tokens if t.is_word]
        assert len(words) >= 30
        value, absent = morpholex.mtld(tokens)
        assert not absent
        rel_close(value, mtld_oracle(words))


class TestHddOracle:
    @pytest.mark.parametrize(
        "name,words",
        [(n, w) for n, w in SWEEP if len(w) >= 42],
        ids=[n for n, w in SWEEP if len(w) >= 42],
    )
    def test_matches_hypergeometric(self, name, words):
        value, absent = morpholex.hdd([W(w) for w in words])
        assert not absent
        rel_close(value, hdd_oracle(words))

    def test_single_type_is_one_over_sample(self):
        value, absent = morpholex.hdd([W("x")] * 42)
        assert not absent
        assert value == pytest.approx(1.0 / 42.0, abs=1e-15)

    def test_two_guaranteed_types(self):
        # both types have 21 copies in 42 tokens, so a 42-draw sample
        # always contains each of them
        value, absent = morpholex.hdd([W("x")] * 21 + [W("y")] * 21)
        assert not absent
        assert value == pytest.approx(2.0 / 42.0, abs=1e-15)

    def test_all_distinct_is_one(self):
        value, absent = morpholex.hdd([W("t%d" % i) for i in range(42)])
        assert not absent
        assert value == pytest.approx(1.0, abs=1e-9)

    def test_below_sample_size_absent(self):
        value, absent = morpholex.hdd([W("x")] * 41)
        assert absent and value == 0.0

    def test_larger_population(self):
        rng = random.Random(31)
        words = ["q%d" % rng.randrange(9) for _ in range(60)]
        value, absent = morpholex.hdd([W(w) for w in words])
        assert not absent
        rel_close(value, hdd_oracle(words))


class TestDiversityBasic:
    def test_hand_counts(self):
        toks = [W("a"), W("a"), W("b"), W("c")]
        ndw, ttr, gttr, cttr = morpholex.diversity_basic(toks)
        assert ndw == 3
        assert ttr == pytest.approx(75.0)
        assert gttr == pytest.approx(3.0 / math.sqrt(4) * 100.0)
        assert cttr == pytest.approx(3.0 / math.sqrt(8.0) * 100.0)

    def test_case_folding(self):
        ndw, _, _, _ = morpholex.diversity_basic([W("The"), W("the")])
        assert ndw == 1

    def test_empty(self):
        assert morpholex.diversity_basic([]) == (0, 0.0, 0.0, 0.0)
        assert morpholex.diversity_basic([PUNCT(".")]) == (0, 0.0, 0.0, 0.0)


class TestDensity:
    def test_v1_counts_broad_classes(self):
        toks = [W(w) for w in "the cat quickly ate a red apple".split()]
        tags = ["DT", "NN", "RB", "VBD", "DT", "JJ", "NN"]
        assert morpholex.lexical_density_v1(toks, tags) == pytest.approx(5 / 7)

    def test_v1_includes_modals_v2_does_not(self):
        toks = [W("she"), W("will"), W("go")]
        for t, lemma in zip(toks, ("she", "will", "go")):
            t.lemma = lemma
        tags = ["PRP", "MD", "VB"]
        assert morpholex.lexical_density_v1(toks, tags) == pytest.approx(2 / 3)
        assert morpholex.lexical_density_v2(toks, tags) == pytest.approx(1 / 3)

    def test_v2_drops_be_and_have(self):
        toks = [W("he"), W("is"), W("happy")]
        toks[0].lemma = "he"
        toks[1].lemma = "be"
        toks[2].lemma = "happy"
        tags = ["PRP", "VBZ", "JJ"]
        assert morpholex.lexical_density_v1(toks, tags) == pytest.approx(2 / 3)
        assert morpholex.lexical_density_v2(toks, tags) == pytest.approx(1 / 3)

    def test_v2_adverb_filter(self):
        # -ly adverbs and listed homographs qualify; other adverbs do not
        toks = [W("quickly"), W("fast"), W("maybe")]
        for t in toks:
            t.lemma = t.lower
        tags = ["RB", "RB", "RB"]
        assert morpholex.lexical_density_v2(toks, tags) == pytest.approx(2 / 3)
        assert morpholex.lexical_density_v1(toks, tags) == pytest.approx(1.0)

    def test_empty(self):
        assert morpholex.lexical_density_v1([], []) == 0.0
        assert morpholex.lexical_density_v2([], []) == 0.0


class _FakeFreq:
    """Rank table stub: a list of stems, most frequent first, with a
    fixed fallback frequency for unknown words."""

    def __init__(self, ranked, fallback=0.5):
        self.ranked = list(ranked)
        self.fallback = fallback

    def __contains__(self, word):
        return word in self.ranked

    def rank_of(self, word):
        if word in self.ranked:
            return self.ranked.index(word) + 1
        return None

    def freq_of(self, word):
        if word in self.ranked:
            return float(len(self.ranked) - self.ranked.index(word))
        return self.fallback


class TestSophistication:
    def _toks(self):
        cats = W("cats")
        cats.stem, cats.lemma = "cat", "cat"
        run = W("run")
        run.stem, run.lemma = "run", "run"
        dog = W("dog")
        dog.stem, dog.lemma = "dog", "dog"
        the = W("the")
        the.stem, the.lemma = "the", "the"
        return [cats, run, dog, the], ["NNS", "VBP", "NN", "DT"]

    def test_hand_case(self):
        toks, tags = self._toks()
        freq = _FakeFreq(["cat", "run"])
        lexsph, cls, vsm, vsm_sq = morpholex.lexical_sophistication(
            toks, tags, freq, stopwords={"the"}, frequent_verbs={"run"},
            rare_rank=2)
        # dog is missing from the table, so it is the only rare lexical word
        assert lexsph == pytest.approx(1 / 3)
        # cls averages table frequencies over non-stopwords, unknown -> 0.5
        assert cls == pytest.approx((2.0 + 1.0 + 0.5) / 3)
        assert vsm == (pytest.approx(0.0), False)
        assert vsm_sq == (pytest.approx(0.0), False)

    def test_sophisticated_verb(self):
        toks, tags = self._toks()
        freq = _FakeFreq(["cat", "run"])
        _, _, vsm, vsm_sq = morpholex.lexical_sophistication(
            toks, tags, freq, stopwords=set(), frequent_verbs={"go"},
            rare_rank=2)
        assert vsm[0] == pytest.approx(1.0) and vsm[1] is False
        assert vsm_sq[0] == pytest.approx(1.0 / math.sqrt(2.0))

    def test_no_verbs_absent(self):
        dog = W("dog")
        dog.stem = dog.lemma = "dog"
        _, _, vsm, vsm_sq = morpholex.lexical_sophistication(
            [dog], ["NN"], _FakeFreq(["dog"]), stopwords=set(),
            frequent_verbs=set())
        assert vsm == (0.0, True)
        assert vsm_sq == (0.0, True)

    def test_bundle_integration(self, bundle):
        text = "Scientists investigated the phenomenon carefully and wrote reports."
        tokens = [textpipe.analyze_token(t, bundle.lexicon)
                  for t in textpipe.tokenize(text)]
        tags = ["NNS", "VBD", "DT", "NN", "RB", "CC", "VBD", "NNS", "."]
        lexsph, cls, vsm, _ = morpholex.lexical_sophistication(
            tokens, tags, bundle.frequency, bundle.wordlists.stopwords,
            bundle.wordlists.frequent_verbs)
        assert 0.0 <= lexsph <= 1.0
        assert cls > 0.0
        assert vsm[1] is False


class TestAffixes:
    def test_strips_both_sides(self):
        assert morpholex.count_affixes(
            "unhappiness", prefixes=("un",), suffixes=("ness",)) == (1, 1)

    def test_min_stem_guard(self):
        assert morpholex.count_affixes(
            "ness", prefixes=(), suffixes=("ness",)) == (0, 0)

    def test_longest_affix_wins(self):
        # "ness" beats "s"; nothing remains to strip from "dark"
        assert morpholex.count_affixes(
            "darkness", prefixes=(), suffixes=("s", "ness")) == (0, 1)

    def test_repeated_stripping(self):
        assert morpholex.count_affixes(
            "carelessly", prefixes=(), suffixes=("ly", "less")) == (0, 2)

    def test_means_over_tokens(self):
        toks = [W("unhappiness"), W("dark")]
        pre, suf = morpholex.affix_means(toks, ("un",), ("ness",))
        assert pre == pytest.approx(0.5)
        assert suf == pytest.approx(0.5)

    def test_bundle_lists_nonempty(self, bundle):
        assert len(bundle.wordlists.prefixes) > 0
        assert len(bundle.wordlists.suffixes) > 0
        pre, suf = morpholex.count_affixes(
            "unhelpfulness", bundle.wordlists.prefixes, bundle.wordlists.suffixes)
        assert pre >= 1 and suf >= 1


class TestPhonologyAndPos:
    def test_phonological_means(self):
        a = W("go")
        a.phonemes, a.syllables = 2, 1
        b = W("window")
        b.phonemes, b.syllables = 5, 2
        g, p, s = morpholex.phonological_means([a, b, PUNCT(".")])
        assert g == pytest.approx((2 + 6) / 2)
        assert p == pytest.approx(3.5)
        assert s == pytest.approx(1.5)

    def test_phonological_means_empty(self):
        assert morpholex.phonological_means([]) == (0.0, 0.0, 0.0)

    def test_stem_diversity(self):
        toks = [W("cats"), W("cat"), W("dog")]
        toks[0].lemma = "cat"
        toks[1].lemma = "cat"
        toks[2].lemma = "dog"
        assert morpholex.stem_diversity(toks) == pytest.approx(2 / 3)

    def test_pos_length_means(self):
        toks = [W(w) for w in ("cat", "tiny", "ran")]
        tags = ["NN", "JJ", "VBD"]
        out = morpholex.pos_length_means(toks, tags)
        assert out["noun"] == (pytest.approx(3.0), False)
        assert out["adj"] == (pytest.approx(4.0), False)
        assert out["verb"] == (pytest.approx(3.0), False)
        assert out["adv"] == (0.0, True)

    def test_tense_rates(self):
        rates = morpholex.tense_rates({"simple_past": 3}, 2)
        assert rates["simple_past"] == pytest.approx(1.5)
        assert rates["simple_future"] == 0.0
        assert len(rates) == 13
        assert all(v == 0.0 for v in morpholex.tense_rates({"x": 4}, 0).values())
