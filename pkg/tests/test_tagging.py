"""Averaged-perceptron tagger: accuracy on generator text, unknown-word
behavior, determinism, and model persistence."""

import json

import pytest

from textlevel import synthgen, tagging
from textlevel.tagging import PerceptronTagger, coarse_pos, _normalize


def pairs_from(gold):
    return [([s for s, _ in sent], [t for _, t in sent]) for sent in gold]


@pytest.fixture(scope="module")
def default_tagger():
    return PerceptronTagger.load(tagging.default_tagger_path())


class TestDefaultModel:
    def test_generator_text_accuracy(self, default_tagger):
        # fresh generator seed, so none of these exact sentences were part
        # of the training stream
        gold = synthgen.tagged_sentences(314159, 10)
        right = total = 0
        for words, tags in pairs_from(gold):
            for got, want in zip(default_tagger.tag(words), tags):
                right += got == want
                total += 1
        assert total > 4000
        assert right / total >= 0.95

    def test_unseen_capitalized_name(self, default_tagger):
        tags = default_tagger.tag(["Mr.", "Zorblatt", "teaches", "history", "."])
        assert tags[1] == "NNP"
        tags = default_tagger.tag(
            ["Zorblatt", "and", "Tom", "visited", "London", "."])
        assert tags[0] == "NNP"
        tags = default_tagger.tag(["They", "visited", "Zorblatt", "."])
        assert tags[2] == "NNP"

    def test_tagdict_covers_frequent_words(self, default_tagger):
        assert default_tagger.tagdict.get("the") == "DT"
        assert "." in default_tagger.tagdict


class TestTraining:
    @pytest.fixture(scope="class")
    def corpus(self):
        return pairs_from(synthgen.tagged_sentences(2718, 5))

    def test_reproduces_training_tags(self, corpus):
        tagger = PerceptronTagger().train(corpus, epochs=4, seed=1)
        right = total = 0
        for words, tags in corpus:
            for got, want in zip(tagger.tag(words), tags):
                right += got == want
                total += 1
        assert right / total >= 0.95

    def test_deterministic(self, corpus):
        a = PerceptronTagger().train(corpus, epochs=3, seed=7)
        b = PerceptronTagger().train(corpus, epochs=3, seed=7)
        for words, _ in corpus[:40]:
            assert a.tag(words) == b.tag(words)

    def test_save_load_identical(self, corpus, tmp_path):
        tagger = PerceptronTagger().train(corpus, epochs=3, seed=2)
        path = tmp_path / "tagger.json"
        tagger.save(path)
        loaded = PerceptronTagger.load(path)
        probe = pairs_from(synthgen.tagged_sentences(51, 2))
        for words, _ in probe:
            assert loaded.tag(words) == tagger.tag(words)

    def test_version_gate(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"version": 99}))
        with pytest.raises(ValueError, match="version"):
            PerceptronTagger.load(path)

    def test_tagdict_requires_unambiguous_frequent_words(self):
        common = [(["walk"], ["VB"])] * 6
        ambiguous = [(["play"], ["VB"]), (["play"], ["NN"])] * 3
        tagger = PerceptronTagger().train(common + ambiguous, epochs=1, seed=0)
        assert tagger.tagdict.get("walk") == "VB"
        assert "play" not in tagger.tagdict


class TestHelpers:
    def test_coarse_pos(self):
        assert coarse_pos("NNS") == "noun"
        assert coarse_pos("VBD") == "verb"
        assert coarse_pos("MD") == "verb"
        assert coarse_pos("JJR") == "adj"
        assert coarse_pos("RB") == "adv"
        assert coarse_pos("IN") == "other"

    def test_normalize(self):
        assert _normalize("Hello") == "hello"
        assert _normalize("2024") == "!DIGIT"
        assert _normalize("2nd") == "!MIXED"
