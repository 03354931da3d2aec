"""Syntax features over chunked and parsed sentences, plus the POS
n-gram profile machinery."""

import pytest

from textlevel import synmetrics, trees
from textlevel.textpipe import Token


def W(s):
    return Token(surface=s, lower=s.lower(), is_word=True, graphemes=len(s))


def PUNCT(s):
    return Token(surface=s, lower=s, is_word=False, graphemes=0)


def chunk_sent(words, tags):
    toks = [W(w) if w[0].isalnum() else PUNCT(w) for w in words]
    return synmetrics.analyze_sentences([(toks, tags)], "chunk")[0]


class TestNgramCounts:
    def test_single_sentence(self):
        sent = chunk_sent(["the", "cat", "sits"], ["DT", "NN", "VBZ"])
        assert synmetrics.ngram_counts([sent], 2) == {"DT NN": 1, "NN VBZ": 1}
        assert synmetrics.ngram_counts([sent], 3) == {"DT NN VBZ": 1}

    def test_no_crossing_sentence_bounds(self):
        a = chunk_sent(["he", "ran"], ["PRP", "VBD"])
        b = chunk_sent(["she", "ran"], ["PRP", "VBD"])
        counts = synmetrics.ngram_counts([a, b], 2)
        assert counts == {"PRP VBD": 2}
        # order 3 finds nothing in two-token sentences
        assert synmetrics.ngram_counts([a, b], 3) == {}

    def test_accepts_raw_tag_lists(self):
        counts = synmetrics.ngram_counts([["DT", "NN"], ["DT", "NN"]], 2)
        assert counts == {"DT NN": 2}

    def test_diversity(self):
        a = chunk_sent(["the", "cat", "sits"], ["DT", "NN", "VBZ"])
        b = chunk_sent(["a", "dog", "sits"], ["DT", "NN", "VBZ"])
        out = synmetrics.ngram_diversity([a, b])
        # both sentences share the same tag sequence: 2 bigram types over
        # 6 words and 2 sentences
        assert out["bigram_types_per_word"] == pytest.approx(2 / 6)
        assert out["bigram_types_per_sentence"] == pytest.approx(1.0)
        assert out["trigram_types_per_sentence"] == pytest.approx(0.5)
        assert out["fourgram_types_per_word"] == 0.0


class TestProfiles:
    def test_build_orders_by_count_then_gram(self):
        maps = [{"B A": 3, "A A": 3, "C C": 5}, {"D D": 1}]
        prof = synmetrics.build_profile(maps)
        assert prof == {"C C": 1, "A A": 2, "B A": 3, "D D": 4}

    def test_build_truncates(self):
        maps = [{"g%03d" % i: 100 - i for i in range(50)}]
        prof = synmetrics.build_profile(maps, size=10)
        assert len(prof) == 10
        assert prof["g000"] == 1 and prof["g009"] == 10
        assert "g010" not in prof

    def test_self_distance_zero(self):
        prof = {"A": 1, "B": 2, "C": 3}
        assert synmetrics.profile_distance(prof, prof) == 0.0

    def test_rank_displacement(self):
        # swapped ranks displace each entry by one
        assert synmetrics.profile_distance({"a": 1, "b": 2}, {"b": 1, "a": 2}) == 2.0

    def test_miss_penalty_is_size_plus_one(self):
        level = {"x": 1, "y": 2}
        assert synmetrics.profile_distance({"c": 1}, level) == 2.0
        assert synmetrics.profile_distance({"c": 2}, level) == 1.0

    def test_distance_is_float(self):
        assert isinstance(synmetrics.profile_distance({"a": 1}, {"a": 1}), float)

    def test_save_load_round_trip(self, tmp_path):
        profiles = {
            1: {2: {"DT NN": 1, "NN VBZ": 2}, 3: {"DT NN VBZ": 1}},
            2: {2: {"PRP VBD": 1}, 3: {}},
        }
        path = tmp_path / "profiles.json"
        synmetrics.save_profiles(profiles, path)
        loaded = synmetrics.load_profiles(path)
        assert loaded == profiles
        # keys must come back as ints, not strings
        assert all(isinstance(k, int) for k in loaded)
        assert all(isinstance(o, int) for o in loaded[1])


class TestChunkPhrases:
    def test_np_vp_pp_layout(self):
        sent = chunk_sent(
            ["the", "cat", "sits", "on", "the", "mat"],
            ["DT", "NN", "VBZ", "IN", "DT", "NN"],
        )
        labels = [(c.label, c.start, c.end) for c in sent.chunks]
        assert labels == [
            ("NP", 0, 2), ("VP", 2, 3), ("PP", 3, 6), ("NP", 4, 6)]

    def test_phrase_features_hand_counts(self):
        sent = chunk_sent(
            ["the", "cat", "sits", "on", "the", "mat"],
            ["DT", "NN", "VBZ", "IN", "DT", "NN"],
        )
        out, absent = synmetrics.phrase_features([sent])
        assert not absent
        assert out["xp_total"] == 4.0
        assert out["r_np"] == pytest.approx(0.5)
        assert out["nb_np"] == pytest.approx(2.0)
        assert out["len_np"] == pytest.approx(2.0)
        assert out["r_pp"] == pytest.approx(0.25)
        assert out["len_pp"] == pytest.approx(3.0)
        assert out["len_vp"] == pytest.approx(1.0)
        assert out["nb_xp"] == pytest.approx(4.0)
        assert out["len_xp"] == pytest.approx(2.0)
        assert out["r_advp"] == 0.0 and out["r_ap"] == 0.0

    def test_no_phrases_absent(self):
        sent = chunk_sent(["ouch", "!"], ["UH", "."])
        out, absent = synmetrics.phrase_features([sent])
        assert absent
        assert out["xp_total"] == 0.0

    def test_adjp_advp(self):
        sent = chunk_sent(
            ["very", "quickly", ",", "happy"], ["RB", "RB", ",", "JJ"])
        labels = [c.label for c in sent.chunks]
        assert labels == ["ADVP", "ADJP"]
        out, _ = synmetrics.phrase_features([sent])
        assert out["len_advp"] == pytest.approx(2.0)
        assert out["len_ap"] == pytest.approx(1.0)


class TestChunkTunits:
    def test_simple_sentence_is_one_unit(self):
        sent = chunk_sent(
            ["the", "cat", "sits", "on", "the", "mat"],
            ["DT", "NN", "VBZ", "IN", "DT", "NN"],
        )
        out, absent = synmetrics.tunit_features([sent], "chunk")
        assert not absent
        assert out["tunit_mean_np"] == pytest.approx(2.0)
        assert out["tunit_mean_vp"] == pytest.approx(1.0)
        assert out["tunit_mean_pp"] == pytest.approx(1.0)
        assert out["tunit_complex_ratio"] == 0.0
        assert out["tunit_mean_len"] == pytest.approx(6.0)

    def test_coordination_splits_units(self):
        sent = chunk_sent(
            ["the", "cat", "ran", "and", "the", "dog", "slept"],
            ["DT", "NN", "VBD", "CC", "DT", "NN", "VBD"],
        )
        out, _ = synmetrics.tunit_features([sent], "chunk")
        # one CC between two verb groups -> two units over seven words
        assert out["tunit_mean_len"] == pytest.approx(3.5)
        assert out["tunit_mean_np"] == pytest.approx(1.0)

    def test_np_coordination_does_not_split(self):
        sent = chunk_sent(
            ["the", "cat", "and", "the", "dog", "ran"],
            ["DT", "NN", "CC", "DT", "NN", "VBD"],
        )
        out, _ = synmetrics.tunit_features([sent], "chunk")
        assert out["tunit_mean_len"] == pytest.approx(6.0)

    def test_subordinator_marks_complex(self):
        sent = chunk_sent(
            ["he", "slept", "because", "he", "was", "tired"],
            ["PRP", "VBD", "IN", "PRP", "VBD", "JJ"],
        )
        out, _ = synmetrics.tunit_features([sent], "chunk")
        assert out["tunit_complex_ratio"] == pytest.approx(1.0)

    def test_empty_absent(self):
        out, absent = synmetrics.tunit_features([], "chunk")
        assert absent
        assert out["tunit_mean_len"] == 0.0


class TestChunkSentenceFeatures:
    def test_mean_length_and_height(self):
        sent = chunk_sent(
            ["the", "cat", "sits", "on", "the", "mat"],
            ["DT", "NN", "VBZ", "IN", "DT", "NN"],
        )
        out = synmetrics.sentence_features([sent], "chunk")
        assert out["mean_len_sentence"] == pytest.approx(6.0)
        # flat estimate of 4 plus one for the PP
        assert out["tree_height"] == pytest.approx(5.0)

    def test_wh_question(self):
        sent = chunk_sent(["What", "is", "that", "?"], ["WP", "VBZ", "DT", "."])
        out = synmetrics.sentence_features([sent], "chunk")
        assert out["wh_qst"] == pytest.approx(1.0)
        assert out["len_wh_qst"] == pytest.approx(3.0)
        assert out["inv_qst"] == 0.0

    def test_inverted_question(self):
        sent = chunk_sent(["Is", "he", "here", "?"], ["VBZ", "PRP", "RB", "."])
        out = synmetrics.sentence_features([sent], "chunk")
        assert out["inv_qst"] == pytest.approx(1.0)
        assert out["len_inv_qst"] == pytest.approx(3.0)
        assert out["wh_qst"] == 0.0

    def test_inverted_declarative(self):
        sent = chunk_sent(["Comes", "the", "dawn", "."], ["VBZ", "DT", "NN", "."])
        out = synmetrics.sentence_features([sent], "chunk")
        assert out["inv_decl"] == pytest.approx(1.0)
        assert out["len_inv_decl"] == pytest.approx(3.0)

    def test_subordinate_clause_span(self):
        sent = chunk_sent(
            ["he", "slept", "because", "he", "was", "tired"],
            ["PRP", "VBD", "IN", "PRP", "VBD", "JJ"],
        )
        out = synmetrics.sentence_features([sent], "chunk")
        assert out["subord"] == pytest.approx(1.0)
        # span runs from the subordinator to sentence end: 4 words
        assert out["len_subord"] == pytest.approx(4.0)
        # "because he" also scans as a PP chunk, so both height bumps apply
        assert out["tree_height"] == pytest.approx(6.0)

    def test_subordinate_span_stops_at_comma(self):
        sent = chunk_sent(
            ["because", "he", "was", "tired", ",", "he", "slept"],
            ["IN", "PRP", "VBD", "JJ", ",", "PRP", "VBD"],
        )
        out = synmetrics.sentence_features([sent], "chunk")
        assert out["len_subord"] == pytest.approx(4.0)

    def test_sentence_coordination(self):
        sent = chunk_sent(
            ["the", "cat", "ran", "and", "the", "dog", "slept"],
            ["DT", "NN", "VBD", "CC", "DT", "NN", "VBD"],
        )
        out = synmetrics.sentence_features([sent], "chunk")
        assert out["sent_coord"] == pytest.approx(1.0)
        assert out["len_sent_coord"] == pytest.approx(7.0)
        assert out["xp_coord"] == 0.0

    def test_phrase_coordination(self):
        sent = chunk_sent(
            ["the", "cat", "and", "the", "dog", "ran"],
            ["DT", "NN", "CC", "DT", "NN", "VBD"],
        )
        out = synmetrics.sentence_features([sent], "chunk")
        assert out["xp_coord"] == pytest.approx(1.0)
        # coordinated span covers both conjuncts: tokens 0..5
        assert out["len_xp_coord"] == pytest.approx(5.0)
        assert out["sent_coord"] == 0.0

    def test_empty_document(self):
        out = synmetrics.sentence_features([], "chunk")
        assert out["mean_len_sentence"] == 0.0
        assert out["tree_height"] == 0.0


TREE_TEXT = "(S (NP (DT The) (NN cat)) (VP (VBZ sits) (PP (IN on) (NP (DT the) (NN mat)))))"


def tree_sent(words, tags, tree_text):
    toks = [W(w) for w in words]
    tree = trees.parse_trees(tree_text)[0]
    return synmetrics.analyze_sentences([(toks, tags, tree)], "tree")[0]


class TestTreeMode:
    def test_phrase_features_from_parse(self):
        sent = tree_sent(
            ["The", "cat", "sits", "on", "the", "mat"],
            ["DT", "NN", "VBZ", "IN", "DT", "NN"],
            TREE_TEXT,
        )
        out, absent = synmetrics.phrase_features([sent])
        assert not absent
        assert out["xp_total"] == 4.0
        assert out["nb_np"] == pytest.approx(2.0)
        assert out["len_vp"] == pytest.approx(4.0)
        assert out["len_pp"] == pytest.approx(3.0)

    def test_leaf_count_mismatch_rejected(self):
        toks = [W("The"), W("cat")]
        tree = trees.parse_trees(TREE_TEXT)[0]
        with pytest.raises(trees.TreeError):
            synmetrics.analyze_sentences([(toks, ["DT", "NN"], tree)], "tree")

    def test_unknown_mode_rejected(self):
        with pytest.raises(ValueError):
            synmetrics.analyze_sentences([], "forest")

    def test_tree_tunits(self):
        sent = tree_sent(
            ["The", "cat", "sits", "on", "the", "mat"],
            ["DT", "NN", "VBZ", "IN", "DT", "NN"],
            TREE_TEXT,
        )
        out, absent = synmetrics.tunit_features([sent], "tree")
        assert not absent
        assert out["tunit_mean_len"] == pytest.approx(6.0)
        assert out["tunit_complex_ratio"] == 0.0

    def test_tree_sentence_features(self):
        sent = tree_sent(
            ["The", "cat", "sits", "on", "the", "mat"],
            ["DT", "NN", "VBZ", "IN", "DT", "NN"],
            TREE_TEXT,
        )
        out = synmetrics.sentence_features([sent], "tree")
        assert out["mean_len_sentence"] == pytest.approx(6.0)
        # S > VP > PP > NP > DT > leaf
        assert out["tree_height"] == pytest.approx(5.0)
        assert out["subord"] == 0.0
