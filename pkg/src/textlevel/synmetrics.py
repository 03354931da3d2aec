"""Syntactic feature blocks over chunked or fully parsed sentences.

Chunk mode works from POS tags and the regular-grammar chunker and marks
its output approximate; tree mode reads the same measures off bracketed
parses exactly.
"""

import json

from . import trees as treemod
from .chunker import chunk as chunk_sentence

SUBORDINATORS = frozenset(
    """
    because although though while when whenever since if unless until
    whereas that whether after before once so
    """.split()
)

WH_WORDS = frozenset("what where when why who whom whose which how".split())

AUX_STARTERS = frozenset(
    """
    is are was were am be been do does did have has had will would can
    could shall should may might must
    """.split()
)

VERB_TAGS = frozenset(("VB", "VBD", "VBG", "VBN", "VBP", "VBZ", "MD"))
NOUN_ISH = frozenset(("NN", "NNS", "NNP", "NNPS", "PRP", "WP", "EX"))

PHRASE_ORDER = ("NP", "VP", "PP", "ADVP", "AP")
_TREE_LABEL = {"NP": "NP", "VP": "VP", "PP": "PP", "ADVP": "ADVP", "AP": "ADJP"}
_CHUNK_LABEL = {"NP": "NP", "VP": "VP", "PP": "PP", "ADVP": "ADVP", "AP": "ADJP"}

PROFILE_SIZE = 300
NGRAM_ORDERS = (2, 3, 4)


class SentenceAnalysis:
    """One sentence with everything syntax features need.

    tree is None in chunk mode; chunks is None in tree mode.
    """

    def __init__(self, tokens, tags, chunks=None, tree=None):
        self.tokens = tokens
        self.tags = tags
        self.chunks = chunks
        self.tree = tree
        self.word_count = sum(1 for t in tokens if t.is_word)
        self._stats = None

    @property
    def stats(self):
        if self._stats is None and self.tree is not None:
            self._stats = treemod.tree_stats(self.tree)
        return self._stats


def analyze_sentences(sentence_data, mode):
    """Build SentenceAnalysis objects.

    sentence_data: (tokens, tags) pairs in chunk mode, or
    (tokens, tags, tree) triples in tree mode.
    """
    out = []
    if mode == "chunk":
        for tokens, tags in sentence_data:
            out.append(SentenceAnalysis(tokens, tags, chunks=chunk_sentence(tags)))
    elif mode == "tree":
        for tokens, tags, tree in sentence_data:
            leaves = tree.leaves()
            if len(leaves) != len(tokens):
                raise treemod.TreeError(
                    "tree has %d leaves but the sentence has %d tokens"
                    % (len(leaves), len(tokens))
                )
            out.append(SentenceAnalysis(tokens, tags, tree=tree))
    else:
        raise ValueError("mode must be 'chunk' or 'tree'")
    return out


def _phrase_spans(sent):
    """(label, length) pairs for the five phrase kinds plus every XP."""
    if sent.tree is not None:
        spans = []
        for node in sent.tree.iter_nodes():
            if not node.is_leaf and node.label in treemod.PHRASE_LABELS:
                spans.append((node.label, node.span_length()))
        return spans
    return [(c.label, len(c)) for c in sent.chunks]


def phrase_features(sentences):
    """Counts, ratios, and mean lengths of phrase chunks.

    Ratios are shares of all phrases; nb* values are per sentence; len*
    values are mean token lengths. All zero with absent=True when the
    document has no phrases at all.
    """
    n_sents = len(sentences)
    all_spans = []
    for sent in sentences:
        all_spans.extend(_phrase_spans(sent))
    xp_total = len(all_spans)
    out = {"xp_total": float(xp_total)}
    absent = xp_total == 0
    for kind in PHRASE_ORDER:
        label = _TREE_LABEL[kind]
        spans = [ln for lab, ln in all_spans if lab == label]
        out["r_%s" % kind.lower()] = (len(spans) / xp_total) if xp_total else 0.0
        out["nb_%s" % kind.lower()] = (len(spans) / n_sents) if n_sents else 0.0
        out["len_%s" % kind.lower()] = (sum(spans) / len(spans)) if spans else 0.0
    out["nb_xp"] = (xp_total / n_sents) if n_sents else 0.0
    out["len_xp"] = (
        sum(ln for _, ln in all_spans) / xp_total if xp_total else 0.0
    )
    return out, absent


def _chunk_tunit_counts(sent):
    """Heuristic clause segmentation: a CC between verb groups opens a
    new unit."""
    vp_spans = [c for c in sent.chunks if c.label == "VP"]
    joins = 0
    for i, tag in enumerate(sent.tags):
        if tag != "CC":
            continue
        before = any(c.end <= i for c in vp_spans)
        after = any(c.start > i for c in vp_spans)
        if before and after:
            joins += 1
    return 1 + joins


def _chunk_has_subordinator(sent):
    return any(
        tok.lower in SUBORDINATORS and tag in ("IN", "WRB")
        for tok, tag in zip(sent.tokens, sent.tags)
    )


def tunit_features(sentences, mode):
    """Phrase counts per T-unit, the complex-unit share, and mean length.

    Tree mode reads T-units off the parses; chunk mode estimates one unit
    per sentence plus one per clause-level coordination.
    """
    total_units = 0
    complex_units = 0
    total_np = 0
    total_vp = 0
    total_pp = 0
    total_len = 0
    for sent in sentences:
        if mode == "tree":
            st = sent.stats
            total_units += st["tunit_count"]
            complex_units += st["complex_tunit_count"]
            total_np += sum(st["tunit_np"])
            total_vp += sum(st["tunit_vp"])
            total_pp += sum(st["tunit_pp"])
            total_len += sum(st["tunit_lengths"])
        else:
            units = _chunk_tunit_counts(sent)
            total_units += units
            if _chunk_has_subordinator(sent):
                complex_units += 1
            total_np += sum(1 for c in sent.chunks if c.label == "NP")
            total_vp += sum(1 for c in sent.chunks if c.label == "VP")
            total_pp += sum(1 for c in sent.chunks if c.label == "PP")
            total_len += sent.word_count
    if total_units == 0:
        return (
            {
                "tunit_mean_np": 0.0,
                "tunit_mean_vp": 0.0,
                "tunit_mean_pp": 0.0,
                "tunit_complex_ratio": 0.0,
                "tunit_mean_len": 0.0,
            },
            True,
        )
    return (
        {
            "tunit_mean_np": total_np / total_units,
            "tunit_mean_vp": total_vp / total_units,
            "tunit_mean_pp": total_pp / total_units,
            "tunit_complex_ratio": complex_units / total_units,
            "tunit_mean_len": total_len / total_units,
        },
        False,
    )


def _chunk_sentence_structures(sent):
    """Heuristic SINV/SQ/SBARQ/subordinate/coordination detection."""
    tags = sent.tags
    tokens = sent.tokens
    wc = sent.word_count
    is_question = any(t.surface == "?" for t in tokens)
    first_word = None
    for tok, tag in zip(tokens, tags):
        if tok.is_word:
            first_word = (tok, tag)
            break

    subord_spans = []
    for i, (tok, tag) in enumerate(zip(tokens, tags)):
        if tok.lower in SUBORDINATORS and tag in ("IN", "WRB"):
            end = len(tokens)
            for j in range(i + 1, len(tokens)):
                if tokens[j].surface == ",":
                    end = j
                    break
            subord_spans.append(sum(1 for t in tokens[i:end] if t.is_word))

    wh_q = []
    inv_q = []
    inv_decl = []
    if is_question and first_word is not None:
        tok, tag = first_word
        if tok.lower in WH_WORDS or tag in ("WRB", "WP", "WDT", "WP$"):
            wh_q.append(wc)
        elif tok.lower in AUX_STARTERS or tag == "MD":
            inv_q.append(wc)
    elif first_word is not None:
        first_verb = next(
            (i for i, tag in enumerate(tags) if tag in VERB_TAGS), None
        )
        first_noun = next(
            (i for i, tag in enumerate(tags) if tag in NOUN_ISH), None
        )
        if (
            first_verb is not None
            and first_noun is not None
            and first_verb < first_noun
            and first_word[1] in VERB_TAGS
        ):
            inv_decl.append(wc)

    coord_s = []
    vp_spans = [c for c in sent.chunks if c.label == "VP"]
    for i, tag in enumerate(tags):
        if tag == "CC":
            before = any(c.end <= i for c in vp_spans)
            after = any(c.start > i for c in vp_spans)
            if before and after:
                coord_s.append(wc)

    coord_xp = []
    by_end = {c.end: c for c in sent.chunks}
    by_start = {c.start: c for c in sent.chunks}
    for i, tag in enumerate(tags):
        if tag == "CC" and i in by_end and (i + 1) in by_start:
            left = by_end[i]
            right = by_start[i + 1]
            if left.label == right.label:
                coord_xp.append(right.end - left.start)

    height = 4.0
    if any(c.label == "PP" for c in sent.chunks):
        height += 1.0
    if subord_spans:
        height += 1.0

    return {
        "height": height,
        "subord": subord_spans,
        "inv_decl": inv_decl,
        "inv_q": inv_q,
        "wh_q": wh_q,
        "coord_s": coord_s,
        "coord_xp": coord_xp,
    }


def _tree_sentence_structures(sent):
    st = sent.stats
    return {
        "height": float(st["height"]),
        "subord": st["sbar_spans"],
        "inv_decl": st["sinv_spans"],
        "inv_q": st["sq_spans"],
        "wh_q": st["sbarq_spans"],
        "coord_s": st["coord_s_lengths"],
        "coord_xp": st["coord_xp_lengths"],
    }


def sentence_features(sentences, mode):
    """Sentence-level structure rates and mean construction lengths."""
    n = len(sentences)
    if n == 0:
        return {
            name: 0.0
            for name in (
                "mean_len_sentence", "tree_height", "subord", "len_subord",
                "inv_decl", "len_inv_decl", "inv_qst", "len_inv_qst",
                "wh_qst", "len_wh_qst", "sent_coord", "len_sent_coord",
                "xp_coord", "len_xp_coord",
            )
        }
    heights = []
    buckets = {k: [] for k in ("subord", "inv_decl", "inv_q", "wh_q", "coord_s", "coord_xp")}
    for sent in sentences:
        if mode == "tree":
            info = _tree_sentence_structures(sent)
        else:
            info = _chunk_sentence_structures(sent)
        heights.append(info["height"])
        for key in buckets:
            buckets[key].extend(info[key])

    def rate_and_len(key):
        spans = buckets[key]
        rate = len(spans) / n
        mean_len = sum(spans) / len(spans) if spans else 0.0
        return rate, mean_len

    subord, len_subord = rate_and_len("subord")
    inv_decl, len_inv_decl = rate_and_len("inv_decl")
    inv_q, len_inv_q = rate_and_len("inv_q")
    wh_q, len_wh_q = rate_and_len("wh_q")
    coord_s, len_coord_s = rate_and_len("coord_s")
    coord_xp, len_coord_xp = rate_and_len("coord_xp")

    return {
        "mean_len_sentence": sum(s.word_count for s in sentences) / n,
        "tree_height": sum(heights) / n,
        "subord": subord,
        "len_subord": len_subord,
        "inv_decl": inv_decl,
        "len_inv_decl": len_inv_decl,
        "inv_qst": inv_q,
        "len_inv_qst": len_inv_q,
        "wh_qst": wh_q,
        "len_wh_qst": len_wh_q,
        "sent_coord": coord_s,
        "len_sent_coord": len_coord_s,
        "xp_coord": coord_xp,
        "len_xp_coord": len_coord_xp,
    }


def ngram_counts(sentences, order):
    """POS n-gram occurrence counts, never crossing sentence bounds."""
    counts = {}
    for sent in sentences:
        tags = sent.tags if isinstance(sent, SentenceAnalysis) else sent
        for i in range(len(tags) - order + 1):
            key = " ".join(tags[i : i + order])
            counts[key] = counts.get(key, 0) + 1
    return counts


def ngram_diversity(sentences):
    """Distinct n-gram types (orders 2..4) per word and per sentence."""
    n_sents = len(sentences)
    n_words = sum(s.word_count for s in sentences)
    out = {}
    names = {2: "bigram", 3: "trigram", 4: "fourgram"}
    for order in NGRAM_ORDERS:
        types = len(ngram_counts(sentences, order))
        name = names[order]
        out["%s_types_per_word" % name] = types / n_words if n_words else 0.0
        out["%s_types_per_sentence" % name] = types / n_sents if n_sents else 0.0
    return out


def build_profile(count_maps, size=PROFILE_SIZE):
    """Rank map of the most frequent n-grams of a document collection.

    Aggregates the given per-document count maps, orders by descending
    frequency with lexicographic tie-break, keeps the top `size`, and
    assigns ranks from 1.
    """
    totals = {}
    for counts in count_maps:
        for gram, c in counts.items():
            totals[gram] = totals.get(gram, 0) + c
    ordered = sorted(totals.items(), key=lambda kv: (-kv[1], kv[0]))[:size]
    return {gram: rank for rank, (gram, _) in enumerate(ordered, start=1)}


def profile_distance(text_profile, level_profile):
    """Sum of rank displacements; misses cost the maximum rank plus one."""
    penalty = len(level_profile) + 1
    total = 0
    for gram, rank in text_profile.items():
        total += abs(rank - level_profile.get(gram, penalty))
    return float(total)


def save_profiles(profiles, path):
    """Serialize {level: {order: profile}} to JSON."""
    payload = {
        str(level): {str(order): prof for order, prof in by_order.items()}
        for level, by_order in profiles.items()
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, sort_keys=True, separators=(",", ":"))


def load_profiles(path):
    with open(path, "r", encoding="utf-8") as fh:
        payload = json.load(fh)
    return {
        int(level): {int(order): prof for order, prof in by_order.items()}
        for level, by_order in payload.items()
    }
