"""Phrase chunking from a fixed grammar over Penn tags.

Single left-to-right pass. PP chunks span the preposition plus its object
NP, and that NP is also emitted on its own, so spans may nest but never
partially overlap.
"""

from dataclasses import dataclass

NOUN_TAGS = ("NN", "NNS", "NNP", "NNPS")
PRONOUN_TAGS = ("PRP", "WP", "EX")
DET_TAGS = ("DT", "PDT", "PRP$", "WDT", "WP$")
ADJ_TAGS = ("JJ", "JJR", "JJS")
NUM_TAGS = ("CD",)
VERB_TAGS = ("VB", "VBD", "VBG", "VBN", "VBP", "VBZ", "MD")
ADV_TAGS = ("RB", "RBR", "RBS")


@dataclass
class Chunk:
    label: str
    start: int
    end: int  # exclusive

    def __len__(self):
        return self.end - self.start


def _scan_np(tags, i):
    """NP starting at i, or None. Det/adj/number run then >=1 noun."""
    n = len(tags)
    if i < n and tags[i] in PRONOUN_TAGS:
        return i + 1
    j = i
    while j < n and (tags[j] in DET_TAGS or tags[j] in ADJ_TAGS or tags[j] in NUM_TAGS):
        j += 1
    if j < n and tags[j] in NOUN_TAGS:
        while j < n and tags[j] in NOUN_TAGS:
            j += 1
        return j
    return None


def _scan_verb_group(tags, i):
    """Verb group starting at i, adverbs allowed inside, or None."""
    n = len(tags)
    if i >= n:
        return None
    if tags[i] == "TO" and i + 1 < n and tags[i + 1] in VERB_TAGS:
        i0 = i
        j = i + 1
    elif tags[i] in VERB_TAGS:
        i0 = i
        j = i
    else:
        return None
    end = None
    while j < n:
        if tags[j] in VERB_TAGS:
            end = j + 1
            j += 1
        elif tags[j] in ADV_TAGS and end is not None and j + 1 < n and (
            tags[j + 1] in VERB_TAGS
        ):
            j += 1
        else:
            break
    if end is None:
        return None
    return (i0, end)


def chunk(tags):
    """Chunks for one tagged sentence, in textual order."""
    chunks = []
    n = len(tags)
    i = 0
    while i < n:
        tag = tags[i]
        if tag in ("IN",) or (tag == "TO" and not (i + 1 < n and tags[i + 1] in VERB_TAGS)):
            np_end = _scan_np(tags, i + 1)
            if np_end is not None:
                chunks.append(Chunk("PP", i, np_end))
                chunks.append(Chunk("NP", i + 1, np_end))
                i = np_end
                continue
            i += 1
            continue
        vg = _scan_verb_group(tags, i)
        if vg is not None:
            chunks.append(Chunk("VP", vg[0], vg[1]))
            i = vg[1]
            continue
        np_end = _scan_np(tags, i)
        if np_end is not None:
            chunks.append(Chunk("NP", i, np_end))
            i = np_end
            continue
        if tag in ADJ_TAGS:
            j = i
            while j < n and tags[j] in ADJ_TAGS:
                j += 1
            chunks.append(Chunk("ADJP", i, j))
            i = j
            continue
        if tag in ADV_TAGS:
            j = i
            while j < n and tags[j] in ADV_TAGS:
                j += 1
            chunks.append(Chunk("ADVP", i, j))
            i = j
            continue
        i += 1
    return chunks
