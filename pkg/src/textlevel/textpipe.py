"""Sentence splitting, tokenization, and letter-level word profiles.

The splitter and tokenizer are deliberately rule-based: behaviour has to be
reproducible byte for byte across runs and platforms, which rules out
model-driven segmenters.
"""

import re
from dataclasses import dataclass, field

from . import porter
from .lemmatizer import lemmatize

# Words after which a period does not end the sentence.
# may/sat/sun are left out: too common as ordinary words
ABBREVIATIONS = frozenset(
    """
    mr mrs ms dr prof rev gen rep sen st jr sr messrs mmes msgr
    co inc ltd corp dept div est
    vs etc al eg ie cf ca approx
    no nos vol vols p pp ch chs sec fig figs ed eds
    jan feb mar apr jun jul aug sep sept oct nov dec
    mon tue tues wed thu thur thurs fri
    a.m p.m u.s u.k e.g i.e
    """.split()
)

_TERMINALS = ".?!"
_CLOSERS = "\"')]”’"
_OPENERS = "\"'([“‘"

_CLITICS = ("n't", "'re", "'ve", "'ll", "'s", "'d", "'m")


@dataclass
class SentenceSpan:
    start: int
    end: int
    raw: str


@dataclass
class Token:
    surface: str
    lower: str
    is_word: bool
    graphemes: int
    stem: str = ""
    lemma: str = ""
    phonemes: int = 0
    syllables: int = 0


def _word_before(text, pos):
    # the token of letters/periods immediately left of text[pos]
    i = pos
    while i > 0 and (text[i - 1].isalpha() or text[i - 1] == "."):
        i -= 1
    return text[i:pos]


def split_sentences(text, abbreviations=ABBREVIATIONS):
    """Split text into sentence spans.

    A boundary is a run of terminal punctuation followed by whitespace and
    an uppercase opener, unless the period closes a known abbreviation or a
    single-letter initial.
    """
    spans = []
    n = len(text)
    start = 0
    i = 0
    while i < n:
        ch = text[i]
        if ch not in _TERMINALS:
            i += 1
            continue
        j = i
        while j + 1 < n and text[j + 1] in _TERMINALS:
            j += 1
        k = j + 1
        while k < n and text[k] in _CLOSERS:
            k += 1
        if k >= n:
            i = j + 1
            continue
        if not text[k].isspace():
            i = j + 1
            continue
        m = k
        while m < n and text[m].isspace():
            m += 1
        while m < n and text[m] in _OPENERS:
            m += 1
        if m >= n or not (text[m].isupper() or text[m].isdigit()):
            i = j + 1
            continue
        if text[i] == "." and i == j:
            word = _word_before(text, i).rstrip(".").lower()
            if word in abbreviations or (len(word) == 1 and word.isalpha()):
                i = j + 1
                continue
        raw = text[start:k].strip()
        if raw:
            spans.append(SentenceSpan(start, k, raw))
        start = k
        i = m
    raw = text[start:n].strip()
    if raw:
        spans.append(SentenceSpan(start, n, raw))
    return spans


def _is_word(chunk):
    return any(c.isalpha() for c in chunk) and not any(c.isdigit() for c in chunk)


def _make_token(chunk):
    graphemes = sum(1 for c in chunk if c.isalpha())
    return Token(chunk, chunk.lower(), _is_word(chunk), graphemes)


def _split_clitics(chunk):
    parts = [chunk]
    changed = True
    while changed:
        changed = False
        head = parts[0]
        low = head.lower()
        for clit in _CLITICS:
            if low.endswith(clit) and len(low) > len(clit):
                base = head[: -len(clit)]
                if any(c.isalpha() for c in base):
                    parts[0:1] = [base, head[-len(clit):]]
                    changed = True
                    break
    return parts


def tokenize(sentence):
    """Tokenize one sentence string.

    Whitespace-delimited, with leading/trailing punctuation detached one
    character at a time and contracted clitics (n't, 's, 're, 've, 'll,
    'd, 'm) split off. Hyphenated words and decimal numbers stay whole.
    """
    tokens = []
    for chunk in sentence.split():
        lead = []
        while chunk and not (chunk[0].isalnum() or chunk[0] in "'"):
            lead.append(chunk[0])
            chunk = chunk[1:]
        trail = []
        while chunk and not chunk[-1].isalnum():
            # keep apostrophes that belong to a clitic
            if chunk[-1] == "'" and len(chunk) > 1 and chunk[-2].isalpha():
                break
            trail.append(chunk[-1])
            chunk = chunk[:-1]
        for c in lead:
            tokens.append(_make_token(c))
        if chunk:
            for part in _split_clitics(chunk):
                tokens.append(_make_token(part))
        for c in reversed(trail):
            tokens.append(_make_token(c))
    return tokens


_VOWEL_RE = re.compile(r"[aeiouy]+")


def count_syllables_fallback(word):
    """Heuristic syllable count for words missing from the lexicon.

    Maximal vowel-letter runs, minus a silent final e (kept after
    consonant+le) and a silent -ed after most consonants, floored at 1.
    """
    low = word.lower()
    groups = _VOWEL_RE.findall(low)
    count = len(groups)
    if count > 1:
        if low.endswith("e") and not (
            len(low) >= 3 and low.endswith("le") and low[-3] not in "aeiouy"
        ):
            count -= 1
        elif low.endswith("ed") and len(low) >= 3 and low[-3] not in "aeiouytd":
            count -= 1
    return max(count, 1)


def phonological_profile(token, lexicon=None):
    """Fill in phoneme and syllable counts for a word token.

    With a lexicon hit, phonemes = entry length and syllables = number of
    stress-marked vowel phonemes. Otherwise phonemes fall back to the
    grapheme count and syllables to the vowel-group heuristic.
    """
    if not token.is_word:
        token.phonemes = 0
        token.syllables = 0
        return token
    entry = lexicon.lookup(token.lower) if lexicon is not None else None
    if entry is not None:
        token.phonemes = len(entry)
        token.syllables = sum(1 for p in entry if p[-1].isdigit())
        if token.syllables == 0:
            token.syllables = 1
    else:
        token.phonemes = token.graphemes
        token.syllables = count_syllables_fallback(token.lower)
    return token


def analyze_token(token, lexicon=None, pos=None):
    """Populate stem, lemma, and phonological counts in place."""
    if token.is_word:
        token.stem = porter.stem(token.lower)
        token.lemma = lemmatize(token.lower, pos or "other")
    else:
        token.stem = token.lower
        token.lemma = token.lower
    return phonological_profile(token, lexicon)
