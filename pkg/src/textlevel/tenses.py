"""Verb tense recognition over tagged tokens.

A pattern table is scanned longest-match-first at each position; matched
tokens are consumed. Up to two adverbs (RB/RBR) may sit between pattern
elements, so "will probably have finished" still reads as future perfect.
"""

TENSE_NAMES = (
    "simple_present",
    "simple_past",
    "present_perfect",
    "present_participle",
    "present_continuous",
    "simple_future",
    "future_perfect",
    "future_continuous",
    "past_continuous",
    "present_perfect_continuous",
    "future_perfect_continuous",
    "past_perfect",
    "infinitive",
)

_ADVERB_TAGS = ("RB", "RBR")


def _m_will(lower, tag):
    return lower in ("will", "'ll", "wo") or (tag == "MD" and lower == "shall")


def _m_have_any(lower, tag):
    return lower in ("have", "has", "'ve")


def _m_have_fin(lower, tag):
    return lower in ("have", "has", "'ve") and tag in ("VBP", "VBZ")


def _m_had(lower, tag):
    return lower in ("had", "'d") and tag == "VBD"


def _m_be_bare(lower, tag):
    return lower == "be"


def _m_been(lower, tag):
    return lower == "been"


def _m_be_pres(lower, tag):
    return lower in ("am", "is", "are", "'m", "'re") or (
        lower == "'s" and tag in ("VBZ",)
    )


def _m_be_past(lower, tag):
    return lower in ("was", "were")


def _m_to(lower, tag):
    return tag == "TO" or lower == "to"


def _tag_matcher(*tags):
    wanted = tags

    def match(lower, tag):
        return tag in wanted

    return match


_VB = _tag_matcher("VB")
_VBN = _tag_matcher("VBN")
_VBG = _tag_matcher("VBG")
_VBD = _tag_matcher("VBD")
_VBP_VBZ = _tag_matcher("VBP", "VBZ")

# Ordered longest-first; first match at a position wins.
PATTERNS = (
    ((_m_will, _m_have_any, _m_been, _VBG), "future_perfect_continuous"),
    ((_m_will, _m_have_any, _VBN), "future_perfect"),
    ((_m_will, _m_be_bare, _VBG), "future_continuous"),
    ((_m_have_fin, _m_been, _VBG), "present_perfect_continuous"),
    ((_m_had, _m_been, _VBG), "past_perfect"),
    ((_m_will, _VB), "simple_future"),
    ((_m_have_fin, _VBN), "present_perfect"),
    ((_m_had, _VBN), "past_perfect"),
    ((_m_be_pres, _VBG), "present_continuous"),
    ((_m_be_past, _VBG), "past_continuous"),
    ((_m_to, _VB), "infinitive"),
    ((_VBD,), "simple_past"),
    ((_VBP_VBZ,), "simple_present"),
    ((_VBG,), "present_participle"),
)


def _try_pattern(lowers, tags, start, matchers):
    """Return the end index after the last matched token, or None."""
    i = start
    n = len(lowers)
    for step, matcher in enumerate(matchers):
        if step > 0:
            skipped = 0
            while i < n and tags[i] in _ADVERB_TAGS and skipped < 2:
                i += 1
                skipped += 1
        if i >= n or not matcher(lowers[i], tags[i]):
            return None
        i += 1
    return i


def detect_tenses(lowers, tags):
    """Count tense constructions in one tagged sentence.

    lowers: lowercase token strings; tags: aligned Penn tags.
    Returns {tense_name: count} with every tense present.
    """
    counts = dict.fromkeys(TENSE_NAMES, 0)
    i = 0
    n = len(lowers)
    while i < n:
        for matchers, name in PATTERNS:
            end = _try_pattern(lowers, tags, i, matchers)
            if end is not None:
                counts[name] += 1
                i = end
                break
        else:
            i += 1
    return counts
