"""Discourse cohesion/coherence and psycholinguistic norm features."""

import numpy as np

from .resources import PSYCH_NORMS

NOUN_TAGS = ("NN", "NNS", "NNP", "NNPS")


def _connector_sequences(connectors):
    """Connector strings -> token tuples, longest first."""
    seqs = [tuple(c.split()) for c in connectors]
    return sorted(seqs, key=lambda s: (-len(s), s))


def count_connectors(sentences, connectors):
    """Occurrences of connector expressions, longest match first.

    sentences: lists of lowercase token strings. Multi-word connectors
    must appear as consecutive tokens inside one sentence; matched tokens
    are consumed so overlapping expressions are not double counted.
    """
    seqs = _connector_sequences(connectors)
    total = 0
    for lowers in sentences:
        i = 0
        n = len(lowers)
        while i < n:
            for seq in seqs:
                if tuple(lowers[i : i + len(seq)]) == seq:
                    total += 1
                    i += len(seq)
                    break
            else:
                i += 1
    return total


def cohesion_features(sentences_lower, word_count, sentence_count, wordlists):
    """Connector rates per word and per sentence, with the argumentative
    subset reported separately."""
    conn = count_connectors(sentences_lower, wordlists.connectors)
    arg = count_connectors(sentences_lower, wordlists.argumentative_connectors)
    wc = max(word_count, 1)
    sc = max(sentence_count, 1)
    return {
        "connectors_per_word": conn / wc,
        "connectors_per_sentence": conn / sc,
        "arg_connectors_per_word": arg / wc,
        "arg_connectors_per_sentence": arg / sc,
    }


def _cosine(a, b):
    na = np.linalg.norm(a)
    nb = np.linalg.norm(b)
    if na == 0.0 or nb == 0.0:
        return None
    return float(np.dot(a, b) / (na * nb))


def _sentence_vectors(tokens, tags, embeddings, nouns_only, stopwords):
    vecs = []
    for tok, tag in zip(tokens, tags):
        if not tok.is_word:
            continue
        if nouns_only:
            if tag not in NOUN_TAGS:
                continue
        elif tok.lower in stopwords:
            continue
        v = embeddings.get(tok.lower)
        if v is not None:
            vecs.append(v)
    return vecs


def coherence(sentence_tokens, sentence_tags, embeddings, stopwords,
              nouns_only=False):
    """Mean inter-sentence similarity over contiguous sentence pairs.

    For each pair, every qualifying word of the second sentence is scored
    by its mean cosine to the qualifying words of the first; the pair
    value is the mean over those words, and the document value the mean
    over pairs. Returns (value, absent): absent with fewer than two
    sentences, no embedding table, or no scorable pair.
    """
    if embeddings is None or len(sentence_tokens) < 2:
        return 0.0, True
    pair_values = []
    for i in range(len(sentence_tokens) - 1):
        prev_vecs = _sentence_vectors(
            sentence_tokens[i], sentence_tags[i], embeddings, nouns_only, stopwords
        )
        next_vecs = _sentence_vectors(
            sentence_tokens[i + 1], sentence_tags[i + 1], embeddings, nouns_only,
            stopwords,
        )
        if not prev_vecs or not next_vecs:
            continue
        word_values = []
        for w in next_vecs:
            sims = [s for u in prev_vecs if (s := _cosine(w, u)) is not None]
            if sims:
                word_values.append(sum(sims) / len(sims))
        if word_values:
            pair_values.append(sum(word_values) / len(word_values))
    if not pair_values:
        return 0.0, True
    return sum(pair_values) / len(pair_values), False


def psych_features(tokens, tags, psych):
    """Mean psycholinguistic norms over noun occurrences.

    Returns ({norm: (value, absent)}, (coverage, coverage_absent)). A
    norm is absent when no covered noun carries it; coverage is the share
    of noun occurrences found in the database at all.
    """
    nouns = [
        tok
        for tok, tag in zip(tokens, tags)
        if tok.is_word and tag in NOUN_TAGS
    ]
    out = {name: (0.0, True) for name in PSYCH_NORMS}
    if psych is None or not nouns:
        return out, (0.0, True)
    sums = {name: 0.0 for name in PSYCH_NORMS}
    counts = {name: 0 for name in PSYCH_NORMS}
    covered = 0
    for tok in nouns:
        rec = psych.norms_for(tok.lower)
        if rec is None and tok.lemma and tok.lemma != tok.lower:
            rec = psych.norms_for(tok.lemma)
        if rec is None:
            continue
        covered += 1
        for name, value in rec.items():
            sums[name] += value
            counts[name] += 1
    for name in PSYCH_NORMS:
        if counts[name]:
            out[name] = (sums[name] / counts[name], False)
    return out, (covered / len(nouns), False)
