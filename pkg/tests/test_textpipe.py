import random

from textlevel import synthgen, textpipe
from textlevel.textpipe import analyze_token, split_sentences, tokenize


def sents(text):
    return [s.raw for s in split_sentences(text)]


def words(text):
    out = []
    for raw in sents(text):
        out.extend(t.surface for t in tokenize(raw))
    return out


class TestSplitSentences:
    def test_plain_split(self):
        got = sents("The dog barked. The cat slept!")
        assert got == ["The dog barked.", "The cat slept!"]

    def test_question_mark(self):
        assert len(sents("Is it good? Yes. Sure!")) == 3

    def test_abbreviation_not_a_boundary(self):
        got = sents("Mr. Smith arrived. He sat down.")
        assert got == ["Mr. Smith arrived.", "He sat down."]

    def test_decimal_number_not_a_boundary(self):
        got = sents("It weighs 3.5 kg. That is light.")
        assert len(got) == 2
        assert got[0] == "It weighs 3.5 kg. That is light." or "3.5" in got[0]

    def test_common_word_before_period_is_boundary(self):
        # sun/sat read as ordinary words, not weekday abbreviations
        got = sents("He saw the sun. An hour passed.")
        assert len(got) == 2

    def test_closing_quote_stays_attached(self):
        got = sents('She said "stop." Then she left.')
        assert len(got) == 2
        assert got[0].endswith('"')

    def test_no_terminal_punctuation(self):
        assert sents("no final stop here") == ["no final stop here"]

    def test_offsets_index_into_source(self):
        text = "One here. Two there."
        for span in split_sentences(text):
            assert text[span.start:span.end].strip() == span.raw


class TestTokenize:
    def test_punctuation_separated(self):
        got = [t.surface for t in tokenize("The dog, it barked.")]
        assert got == ["The", "dog", ",", "it", "barked", "."]

    def test_clitics(self):
        got = [t.surface for t in tokenize("He didn't say he'll go.")]
        assert got == ["He", "did", "n't", "say", "he", "'ll", "go", "."]

    def test_possessive_clitic(self):
        got = [t.surface for t in tokenize("The dog's bone")]
        assert got == ["The", "dog", "'s", "bone"]

    def test_hyphenated_word_kept_whole(self):
        got = [t.surface for t in tokenize("a well-known fact")]
        assert "well-known" in got

    def test_is_word_flags(self):
        toks = tokenize("Stop, now.")
        flags = [(t.surface, t.is_word) for t in toks]
        assert flags == [("Stop", True), (",", False), ("now", True),
                         (".", False)]

    def test_graphemes_count_letters_only(self):
        (tok,) = tokenize("well-known")
        assert tok.graphemes == 9


class TestAnalyzeToken:
    def test_lexicon_phonemes_and_syllables(self, bundle):
        (tok,) = tokenize("window")
        analyze_token(tok, lexicon=bundle.lexicon)
        assert tok.phonemes > 0
        assert tok.syllables == 2
        assert tok.stem != ""

    def test_fallback_syllables_without_lexicon(self):
        for word, n in (("cat", 1), ("window", 2), ("banana", 3),
                        ("idea", 2), ("table", 2)):
            (tok,) = tokenize(word)
            analyze_token(tok)
            assert tok.syllables == n, word

    def test_punctuation_left_alone(self):
        toks = tokenize("go.")
        analyze_token(toks[1])
        assert toks[1].syllables == 0


class TestGeneratorRoundTrip:
    def test_split_tokenize_recovers_generator_tokens(self):
        rng = random.Random(4242)
        for level in (1, 2, 3):
            for _ in range(10):
                doc = synthgen.make_document(rng, level)
                text = synthgen.render_text(doc)
                got = words(text)
                want = [w for sent in doc for (w, _) in sent]
                assert got == want

    def test_abbreviations_never_generated(self):
        # the splitter suppresses boundaries after these; the generator
        # must not emit them as sentence-final words
        rng = random.Random(7)
        for level in (1, 2, 3):
            doc = synthgen.make_document(rng, level)
            for sent in doc:
                final_word = [w for (w, t) in sent if t not in (".", ",")][-1]
                assert final_word.lower() not in textpipe.ABBREVIATIONS
