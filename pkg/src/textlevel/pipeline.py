"""Per-document analysis: raw text in, catalog-ordered features out.

Segmentation, tagging, and token analysis happen once per document; the
feature blocks then read off the shared token/tag structures. Feature
values flagged absent are reported as 0.0 alongside indicator flags so a
matrix row always has the full catalog width.
"""

from dataclasses import dataclass, field

from . import catalog, morpholex, synmetrics, discpsych, readability
from .tagging import coarse_pos
from .tenses import TENSE_NAMES, detect_tenses
from .textpipe import split_sentences, tokenize, analyze_token
from .trees import TreeError

PROFILE_LEVEL_SLOTS = (1, 2, 3)
_NGRAM_NAMES = {2: "bigram", 3: "trigram", 4: "fourgram"}


class PipelineError(ValueError):
    pass


@dataclass
class AnalyzedDoc:
    sentences: list          # lists of Token, one per sentence
    tags: list               # aligned tag lists
    trees: object = None     # ParseTree list in tree mode
    mode: str = "chunk"

    @property
    def tokens(self):
        return [t for sent in self.sentences for t in sent]

    @property
    def flat_tags(self):
        return [tag for sent in self.tags for tag in sent]

    @property
    def word_count(self):
        return sum(1 for t in self.tokens if t.is_word)


@dataclass
class FeatureVector:
    values: dict
    absent: dict
    ngram_maps: dict = field(default_factory=dict)
    approximate: bool = True

    def feature_row(self):
        return [self.values[name] for name in catalog.FEATURE_NAMES]

    def indicator_row(self):
        row = []
        for name in catalog.INDICATOR_NAMES:
            if name == "syntax_approximate":
                row.append(1.0 if self.approximate else 0.0)
                continue
            flagged = any(
                self.absent.get(feat, False)
                for feat, ind in catalog.INDICATOR_OF.items()
                if ind == name
            )
            row.append(1.0 if flagged else 0.0)
        return row


def analyze_text(text, bundle, tagger, trees=None):
    """Segment, tokenize, tag, and analyze one document."""
    sentences = []
    tags = []
    for span in split_sentences(text):
        toks = tokenize(span.raw)
        if not toks:
            continue
        sent_tags = tagger.tag([t.surface for t in toks])
        for tok, tag in zip(toks, sent_tags):
            analyze_token(tok, lexicon=bundle.lexicon, pos=coarse_pos(tag))
        sentences.append(toks)
        tags.append(sent_tags)
    if not any(t.is_word for sent in sentences for t in sent):
        raise PipelineError("document contains no word tokens")
    if trees is not None:
        if len(trees) != len(sentences):
            raise PipelineError(
                "document has %d sentences but %d trees"
                % (len(sentences), len(trees)))
        return AnalyzedDoc(sentences, tags, trees=list(trees), mode="tree")
    return AnalyzedDoc(sentences, tags, mode="chunk")


def _profile_distance_block(ngram_maps, profiles):
    values = {}
    absent = profiles is None or sorted(profiles) != list(PROFILE_LEVEL_SLOTS)
    for order, name in _NGRAM_NAMES.items():
        text_prof = synmetrics.build_profile([ngram_maps[order]])
        for slot in PROFILE_LEVEL_SLOTS:
            key = "profile_dist_%s_l%d" % (name, slot)
            if absent:
                values[key] = 0.0
            else:
                values[key] = synmetrics.profile_distance(
                    text_prof, profiles[slot][order])
    return values, absent


def extract_features(doc, bundle, profiles=None,
                     window=readability.DEFAULT_WINDOW,
                     canonical_spache=False):
    """Compute the full 112-feature catalog for one analyzed document.

    `profiles` maps level slots 1..3 to {order: rank map}; without them
    (or with a non-three-level set) the profile-distance block is
    flagged absent.
    """
    tokens = doc.tokens
    flat_tags = doc.flat_tags
    n_sentences = len(doc.sentences)
    word_count = doc.word_count
    values = {}
    absent = {name: False for name in catalog.FEATURE_NAMES}

    def put(name, value, missing=False):
        values[name] = 0.0 if missing else float(value)
        absent[name] = bool(missing)

    # phonology
    g, p, s = morpholex.phonological_means(tokens)
    put("mean_graphemes", g)
    put("mean_phonemes", p)
    put("mean_syllables", s)

    # morphology
    put("stem_diversity", morpholex.stem_diversity(tokens))
    pre, suf = morpholex.affix_means(
        tokens, bundle.wordlists.prefixes, bundle.wordlists.suffixes)
    put("mean_prefixes", pre)
    put("mean_suffixes", suf)
    for pos_name, (value, miss) in morpholex.pos_length_means(
            tokens, flat_tags).items():
        put("mean_len_" + pos_name, value, miss)
    tense_counts = dict.fromkeys(TENSE_NAMES, 0)
    for sent, sent_tags in zip(doc.sentences, doc.tags):
        found = detect_tenses([t.lower for t in sent], sent_tags)
        for name, count in found.items():
            tense_counts[name] += count
    for name, rate in morpholex.tense_rates(tense_counts, n_sentences).items():
        put("tense_" + name, rate)

    # lexicon
    put("lexdens1", morpholex.lexical_density_v1(tokens, flat_tags))
    put("lexdens2", morpholex.lexical_density_v2(tokens, flat_tags))
    lexsph, cls_val, vsm, vsm_sq = morpholex.lexical_sophistication(
        tokens, flat_tags, bundle.frequency,
        bundle.wordlists.stopwords, bundle.wordlists.frequent_verbs)
    put("lexsph", lexsph)
    put("cls", cls_val)
    put("vsm", vsm[0], vsm[1])
    put("vsm_sq", vsm_sq[0], vsm_sq[1])
    ndw, ttr, gttr, cttr = morpholex.diversity_basic(tokens)
    put("ndw", ndw)
    put("ttr", ttr)
    put("gttr", gttr)
    put("cttr", cttr)
    mtld_val, mtld_miss = morpholex.mtld(tokens)
    put("mtld", mtld_val, mtld_miss)
    hdd_val, hdd_miss = morpholex.hdd(tokens)
    put("hdd", hdd_val, hdd_miss)

    # syntax
    if doc.mode == "tree":
        sent_data = list(zip(doc.sentences, doc.tags, doc.trees))
    else:
        sent_data = list(zip(doc.sentences, doc.tags))
    try:
        analyzed = synmetrics.analyze_sentences(sent_data, doc.mode)
    except TreeError as exc:
        raise PipelineError(str(exc))
    phrase_vals, phrase_miss = synmetrics.phrase_features(analyzed)
    for name, value in phrase_vals.items():
        put(name, value, phrase_miss)
    tunit_vals, tunit_miss = synmetrics.tunit_features(analyzed, doc.mode)
    for name, value in tunit_vals.items():
        put(name, value, tunit_miss)
    for name, value in synmetrics.sentence_features(analyzed, doc.mode).items():
        put(name, value)
    for name, value in synmetrics.ngram_diversity(analyzed).items():
        put(name, value)
    ngram_maps = {
        order: synmetrics.ngram_counts(analyzed, order)
        for order in synmetrics.NGRAM_ORDERS
    }
    dist_vals, dist_miss = _profile_distance_block(ngram_maps, profiles)
    for name, value in dist_vals.items():
        put(name, value, dist_miss)

    # discourse
    sentences_lower = [[t.lower for t in sent] for sent in doc.sentences]
    for name, value in discpsych.cohesion_features(
            sentences_lower, word_count, n_sentences,
            bundle.wordlists).items():
        put(name, value)
    coh_all, miss_all = discpsych.coherence(
        doc.sentences, doc.tags, bundle.embeddings,
        bundle.wordlists.stopwords, nouns_only=False)
    put("coherence_all_words", coh_all, miss_all)
    coh_nouns, miss_nouns = discpsych.coherence(
        doc.sentences, doc.tags, bundle.embeddings,
        bundle.wordlists.stopwords, nouns_only=True)
    put("coherence_nouns", coh_nouns, miss_nouns)

    # psychology
    norm_vals, (coverage, cov_miss) = discpsych.psych_features(
        tokens, flat_tags, bundle.psych)
    for norm, (value, miss) in norm_vals.items():
        put("psy_" + norm, value, miss)
    put("mrc_coverage", coverage, cov_miss)

    # readability
    read_vals, read_miss = readability.all_formulas(
        doc.sentences, bundle.wordlists, window=window,
        canonical_spache=canonical_spache)
    for name, value in read_vals.items():
        put(name, value, read_miss[name])

    return FeatureVector(
        values=values,
        absent=absent,
        ngram_maps=ngram_maps,
        approximate=doc.mode == "chunk",
    )
