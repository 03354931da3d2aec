"""Dictionary-and-rules lemmatizer.

Exception table first, then the longest matching suffix rule for the
coarse part of speech, then the word itself. Coarse POS values are
"noun", "verb", "adj", "adv", "other".
"""

_IRREGULAR_VERBS = {
    "am": "be", "is": "be", "are": "be", "was": "be", "were": "be",
    "been": "be", "being": "be",
    "has": "have", "had": "have", "having": "have",
    "does": "do", "did": "do", "done": "do", "doing": "do",
    "went": "go", "gone": "go", "goes": "go",
    "made": "make", "said": "say", "saw": "see", "seen": "see",
    "came": "come", "took": "take", "taken": "take",
    "got": "get", "gotten": "get", "gave": "give", "given": "give",
    "found": "find", "thought": "think", "told": "tell",
    "became": "become", "showed": "show", "shown": "show",
    "left": "leave", "felt": "feel", "brought": "bring",
    "began": "begin", "begun": "begin", "kept": "keep",
    "held": "hold", "wrote": "write", "written": "write",
    "stood": "stand", "heard": "hear", "meant": "mean",
    "met": "meet", "ran": "run", "paid": "pay", "sat": "sit",
    "spoke": "speak", "spoken": "speak", "lay": "lie", "lain": "lie",
    "led": "lead", "grew": "grow", "grown": "grow",
    "lost": "lose", "fell": "fall", "fallen": "fall",
    "sent": "send", "built": "build", "understood": "understand",
    "drew": "draw", "drawn": "draw", "broke": "break", "broken": "break",
    "spent": "spend", "rose": "rise", "risen": "rise",
    "drove": "drive", "driven": "drive", "bought": "buy",
    "wore": "wear", "worn": "wear", "chose": "choose", "chosen": "choose",
    "ate": "eat", "eaten": "eat", "drank": "drink", "drunk": "drink",
    "sang": "sing", "sung": "sing", "swam": "swim", "swum": "swim",
    "flew": "fly", "flown": "fly", "forgot": "forget",
    "forgotten": "forget", "hid": "hide", "hidden": "hide",
    "knew": "know", "known": "know", "laid": "lay", "lent": "lend",
    "lit": "light", "rode": "ride", "ridden": "ride",
    "rang": "ring", "rung": "ring", "sought": "seek", "sold": "sell",
    "shook": "shake", "shaken": "shake", "shot": "shoot",
    "slept": "sleep", "slid": "slide", "stole": "steal",
    "stolen": "steal", "stuck": "stick", "struck": "strike",
    "swore": "swear", "sworn": "swear", "swept": "sweep",
    "taught": "teach", "tore": "tear", "torn": "tear",
    "threw": "throw", "thrown": "throw", "woke": "wake",
    "woken": "wake", "won": "win", "blew": "blow", "blown": "blow",
    "caught": "catch", "dug": "dig", "fought": "fight",
    "bent": "bend", "bound": "bind", "bled": "bleed", "bred": "breed",
    "crept": "creep", "dealt": "deal", "fed": "feed", "fled": "flee",
    "froze": "freeze", "frozen": "freeze", "hung": "hang",
    "sank": "sink", "sunk": "sink", "spun": "spin", "swung": "swing",
    "wept": "weep", "wound": "wind",
}

_IRREGULAR_NOUNS = {
    "children": "child", "men": "man", "women": "woman",
    "feet": "foot", "teeth": "tooth", "mice": "mouse", "geese": "goose",
    "people": "person", "oxen": "ox",
    "lives": "life", "wives": "wife", "knives": "knife",
    "wolves": "wolf", "leaves": "leaf", "shelves": "shelf",
    "loaves": "loaf", "halves": "half", "selves": "self",
    "thieves": "thief", "calves": "calf", "scarves": "scarf",
    "criteria": "criterion", "phenomena": "phenomenon",
    "analyses": "analysis", "crises": "crisis", "theses": "thesis",
}

_IRREGULAR_ADJS = {
    "better": "good", "best": "good", "worse": "bad", "worst": "bad",
    "further": "far", "farther": "far",
}

_IRREGULAR_ADVS = {
    "better": "well", "best": "well",
}

EXCEPTIONS = {
    "verb": _IRREGULAR_VERBS,
    "noun": _IRREGULAR_NOUNS,
    "adj": _IRREGULAR_ADJS,
    "adv": _IRREGULAR_ADVS,
    "other": {},
}

# base forms that merely look inflected; identity-mapped before rules
for _w in ("bring", "need", "feed", "speed", "seed", "shed", "spring",
           "sting", "swing", "cling", "bleed", "breed", "exceed",
           "proceed", "succeed", "embed", "shred", "wed"):
    _IRREGULAR_VERBS.setdefault(_w, _w)
del _w

_DOUBLED_OK = ("ll", "ss", "zz", "ee", "oo", "ff")


def _undouble(stem):
    if len(stem) >= 2 and stem[-1] == stem[-2] and stem[-1] not in "aeiouy":
        if stem[-2:] not in _DOUBLED_OK:
            return stem[:-1]
    return stem


def _needs_e(stem):
    # short stems ending consonant-vowel-consonant usually dropped an e
    if len(stem) < 3:
        return False
    c3, c2, c1 = stem[-3], stem[-2], stem[-1]
    return (
        c3 not in "aeiouy"
        and c2 in "aeiou"
        and c1 not in "aeiouwxy"
    )


def _strip_verb_affix(word, suffix):
    stem = word[: -len(suffix)]
    und = _undouble(stem)
    if und != stem:
        stem = und
    elif _needs_e(stem):
        stem = stem + "e"
    if not any(c in "aeiouy" for c in stem):
        return word
    return stem


def _verb_rules(word):
    if len(word) > 4 and word.endswith("ies"):
        return word[:-3] + "y"
    if len(word) > 4 and word.endswith("ied"):
        return word[:-3] + "y"
    if len(word) > 4 and word.endswith("ing"):
        return _strip_verb_affix(word, "ing")
    for suf in ("ches", "shes", "sses", "xes", "zes", "oes"):
        if len(word) > len(suf) + 1 and word.endswith(suf):
            return word[:-2]
    if len(word) > 3 and word.endswith("ed"):
        if word[-3] == "e":
            return word[:-1]
        return _strip_verb_affix(word, "ed")
    if len(word) > 3 and word.endswith("es") and word[-3] not in "aeiou":
        return word[:-1]
    if len(word) > 3 and word.endswith("s") and not word.endswith("ss"):
        return word[:-1]
    return word


def _noun_rules(word):
    if len(word) > 4 and word.endswith("ies"):
        return word[:-3] + "y"
    for suf in ("ches", "shes", "sses", "xes", "zes", "oes"):
        if len(word) > len(suf) + 1 and word.endswith(suf):
            return word[:-2]
    if len(word) > 3 and word.endswith("s") and not word.endswith(("ss", "us", "is")):
        return word[:-1]
    return word


def _adj_rules(word):
    if len(word) > 5 and word.endswith("iest"):
        return word[:-4] + "y"
    if len(word) > 4 and word.endswith("ier"):
        return word[:-3] + "y"
    if len(word) > 4 and word.endswith("est"):
        stem = _undouble(word[:-3])
        if stem[-1] == "e":
            return stem
        return stem + "e" if _needs_e(stem) and word[-4] == "e" else stem
    if len(word) > 3 and word.endswith("er"):
        stem = _undouble(word[:-2])
        return stem
    return word


def lemmatize(word, pos="other"):
    """Lemma of a lowercase word given its coarse part of speech."""
    table = EXCEPTIONS.get(pos, EXCEPTIONS["other"])
    if word in table:
        return table[word]
    if pos == "verb":
        return _verb_rules(word)
    if pos == "noun":
        return _noun_rules(word)
    if pos == "adj":
        return _adj_rules(word)
    return word
