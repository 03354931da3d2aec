"""Fixed feature catalog: names, areas, order, and absence indicators.

Matrix column order is a pure function of this module, never of input
data. Any change here is a new catalog version, which changes the
fingerprint and makes older matrices and models refuse to mix.
"""

import hashlib

from .resources import PSYCH_NORMS
from .tenses import TENSE_NAMES

PHONOLOGY = (
    "mean_graphemes", "mean_phonemes", "mean_syllables",
)

MORPHOLOGY = (
    "stem_diversity", "mean_prefixes", "mean_suffixes",
    "mean_len_noun", "mean_len_adj", "mean_len_verb", "mean_len_adv",
) + tuple("tense_" + name for name in TENSE_NAMES)

LEXICON = (
    "lexdens1", "lexdens2", "lexsph", "cls", "vsm", "vsm_sq",
    "ndw", "ttr", "gttr", "cttr", "mtld", "hdd",
)

_PHRASE_KINDS = ("np", "vp", "pp", "advp", "ap")

SYNTAX = (
    ("xp_total",)
    + tuple("r_" + kind for kind in _PHRASE_KINDS)
    + ("nb_xp",) + tuple("nb_" + kind for kind in _PHRASE_KINDS)
    + ("len_xp",) + tuple("len_" + kind for kind in _PHRASE_KINDS)
    + ("tunit_mean_np", "tunit_mean_vp", "tunit_mean_pp",
       "tunit_complex_ratio", "tunit_mean_len")
    + ("mean_len_sentence", "tree_height",
       "subord", "len_subord", "inv_decl", "len_inv_decl",
       "inv_qst", "len_inv_qst", "wh_qst", "len_wh_qst",
       "sent_coord", "len_sent_coord", "xp_coord", "len_xp_coord")
    + ("bigram_types_per_word", "trigram_types_per_word",
       "fourgram_types_per_word", "bigram_types_per_sentence",
       "trigram_types_per_sentence", "fourgram_types_per_sentence")
    + tuple("profile_dist_%s_l%d" % (order, level)
            for order in ("bigram", "trigram", "fourgram")
            for level in (1, 2, 3))
)

DISCOURSE = (
    "connectors_per_word", "connectors_per_sentence",
    "arg_connectors_per_word", "arg_connectors_per_sentence",
    "coherence_all_words", "coherence_nouns",
)

PSYCHOLOGY = tuple("psy_" + norm for norm in PSYCH_NORMS) + ("mrc_coverage",)

READABILITY = (
    "fog", "flesch_kincaid", "coleman_liau", "spache",
    "dale_chall", "ari", "forcast",
)

AREA_FEATURES = (
    ("phonology", PHONOLOGY),
    ("morphology", MORPHOLOGY),
    ("lexicon", LEXICON),
    ("syntax", SYNTAX),
    ("discourse", DISCOURSE),
    ("psychology", PSYCHOLOGY),
    ("readability", READABILITY),
)

FEATURE_NAMES = tuple(name for _, block in AREA_FEATURES for name in block)

AREA_OF = {name: area for area, block in AREA_FEATURES for name in block}

# Features that can be flagged absent, mapped to the indicator column
# that records the absence (1 = absent). Blocks that go absent together
# share one indicator.
INDICATOR_OF = {}
for _name in ("mean_len_noun", "mean_len_adj", "mean_len_verb",
              "mean_len_adv", "vsm", "vsm_sq", "mtld", "hdd",
              "coherence_all_words", "coherence_nouns",
              "coleman_liau", "forcast"):
    INDICATOR_OF[_name] = _name + "_missing"
for _name in PSYCHOLOGY:
    INDICATOR_OF[_name] = _name + "_missing"
for _name in SYNTAX[:18]:
    INDICATOR_OF[_name] = "xp_missing"
for _name in ("tunit_mean_np", "tunit_mean_vp", "tunit_mean_pp",
              "tunit_complex_ratio", "tunit_mean_len"):
    INDICATOR_OF[_name] = "tunit_missing"
for _name in FEATURE_NAMES:
    if _name.startswith("profile_dist_"):
        INDICATOR_OF[_name] = "profile_dist_missing"
del _name

# Indicator columns in first-use order, plus the marker distinguishing
# chunker-approximated syntax from tree-backed syntax.
_seen = []
for _feat in FEATURE_NAMES:
    _ind = INDICATOR_OF.get(_feat)
    if _ind is not None and _ind not in _seen:
        _seen.append(_ind)
INDICATOR_NAMES = tuple(_seen) + ("syntax_approximate",)
del _seen, _feat, _ind

COLUMN_NAMES = ("doc_id",) + FEATURE_NAMES + INDICATOR_NAMES + ("label",)


def catalog_fingerprint():
    """Stable hash of the full column contract."""
    material = "\n".join(FEATURE_NAMES + INDICATOR_NAMES)
    return hashlib.sha256(material.encode("utf-8")).hexdigest()[:16]


def indicator_pairs(feature_names=None, indicator_names=None, offset=0):
    """Map feature column index -> indicator column index for imputation.

    Defaults describe the catalog's own layout, features first then
    indicators; `offset` shifts both (e.g. 0 when doc_id is stripped).
    """
    feats = list(feature_names if feature_names is not None else FEATURE_NAMES)
    inds = list(indicator_names if indicator_names is not None
                else INDICATOR_NAMES)
    ind_col = {name: offset + len(feats) + i for i, name in enumerate(inds)}
    pairs = {}
    for i, name in enumerate(feats):
        target = INDICATOR_OF.get(name)
        if target is not None and target in ind_col:
            pairs[offset + i] = ind_col[target]
    return pairs
