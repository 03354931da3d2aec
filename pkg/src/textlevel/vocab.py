"""Word inventories for the synthetic corpus generator and the bundled
default resources.

Inflected forms are produced by the same orthographic conventions the
lemmatizer inverts, so lemma(form) == base across the whole inventory.
The rare inventory is built from pseudo-word stock deterministically, no
RNG involved, and never overlaps the common inventory.
"""

DETERMINERS = (
    "the", "a", "an", "this", "that", "these", "those",
    "every", "each", "some", "any", "no", "another",
)

# pronoun pools split by verb agreement; "I" is left out so casing stays
# a sentence-position rule only
PRONOUNS_SG = ("he", "she", "it")
PRONOUNS_PL = ("we", "they", "you")
PRONOUNS_OBJ = ("him", "her", "it", "us", "them", "you")
POSSESSIVES = ("my", "your", "his", "her", "its", "our", "their")

NOUNS = (
    "house", "dog", "cat", "teacher", "student", "book", "school", "city",
    "friend", "family", "water", "music", "story", "mother", "father",
    "child", "man", "woman", "person", "morning", "evening", "night", "day",
    "week", "year", "month", "garden", "kitchen", "window", "door", "table",
    "chair", "letter", "phone", "computer", "picture", "movie", "game",
    "song", "bird", "horse", "cow", "sheep", "fish", "tree", "flower",
    "grass", "river", "mountain", "beach", "island", "road", "street",
    "bridge", "car", "bus", "train", "plane", "boat", "shop", "market",
    "bread", "milk", "coffee", "tea", "sugar", "fruit", "apple", "orange",
    "banana", "vegetable", "dinner", "lunch", "breakfast", "food", "cake",
    "rice", "meat", "soup", "salt", "money", "price", "work", "job",
    "office", "doctor", "nurse", "farmer", "driver", "artist", "writer",
    "singer", "player", "team", "sport", "ball", "football", "tennis",
    "summer", "winter", "spring", "autumn", "weather", "rain", "snow",
    "wind", "sun", "moon", "star", "sky", "cloud", "fire", "light",
    "color", "paper", "pen", "pencil", "bag", "box", "key", "clock",
    "watch", "glass", "cup", "plate", "knife", "fork", "spoon", "bed",
    "room", "wall", "floor", "roof", "village", "town", "country", "world",
    "language", "word", "sentence", "question", "answer", "idea", "problem",
    "reason", "result", "example", "lesson", "class", "test", "exam",
    "library", "museum", "hospital", "station", "airport", "hotel",
    "restaurant", "church", "castle", "palace", "forest", "field", "farm",
    "animal", "lion", "tiger", "bear", "rabbit", "mouse", "chicken", "duck",
    "egg", "butter", "cheese", "salad", "juice", "bottle", "basket",
    "holiday", "journey", "trip", "visit", "walk", "run",
    "talk", "dance", "party", "wedding", "birthday", "present", "gift",
    "card", "stamp", "ticket", "map", "newspaper", "magazine", "radio",
    "television", "camera", "photograph", "painting", "drawing", "shirt",
    "dress", "coat", "hat", "shoe", "sock", "pocket", "button", "ring",
    "chain", "stone", "rock", "sand", "hill", "valley", "lake", "sea",
    "ocean", "wave", "ship", "captain", "sailor", "soldier", "king",
    "queen", "prince", "princess", "neighbor", "guest", "visitor",
    "stranger", "baby", "boy", "girl", "brother", "sister", "uncle",
    "aunt", "cousin", "grandmother", "grandfather", "husband", "wife",
    "voice", "sound", "noise", "smell", "taste", "touch", "hand", "arm",
    "leg", "foot", "head", "face", "eye", "ear", "nose", "mouth", "hair",
    "heart", "mind", "body", "health", "life", "death", "history",
    "science", "nature", "art", "culture", "society", "government", "law",
    "peace", "war", "travel", "business", "industry", "machine", "engine",
    "tool", "metal", "wood", "plastic", "cotton", "wool",
)

UNCOUNTABLE = frozenset((
    "water", "music", "rice", "bread", "milk", "coffee", "tea", "sugar",
    "meat", "salt", "money", "grass", "snow", "rain", "weather", "food",
    "butter", "cheese", "juice", "sand", "hair", "health", "tennis",
    "football",
    "history", "science", "nature", "art", "culture", "peace", "war",
    "travel", "business", "industry", "metal", "wood", "plastic",
    "cotton", "wool",
))

IRREGULAR_PLURALS = {
    "child": "children", "man": "men", "woman": "women",
    "person": "people", "foot": "feet", "tooth": "teeth", "mouse": "mice",
    "sheep": "sheep", "fish": "fish", "life": "lives", "knife": "knives",
    "leaf": "leaves", "wife": "wives",
}

# base -> (3sg, past, participle, gerund); None marks regular formation
IRREGULAR_VERBS = {
    "be": None,  # handled by templates with explicit forms
    "have": ("has", "had", "had", "having"),
    "do": ("does", "did", "done", "doing"),
    "go": ("goes", "went", "gone", "going"),
    "see": ("sees", "saw", "seen", "seeing"),
    "take": ("takes", "took", "taken", "taking"),
    "give": ("gives", "gave", "given", "giving"),
    "find": ("finds", "found", "found", "finding"),
    "know": ("knows", "knew", "known", "knowing"),
    "think": ("thinks", "thought", "thought", "thinking"),
    "say": ("says", "said", "said", "saying"),
    "tell": ("tells", "told", "told", "telling"),
    "come": ("comes", "came", "come", "coming"),
    "run": ("runs", "ran", "run", "running"),
    "write": ("writes", "wrote", "written", "writing"),
    "read": ("reads", "read", "read", "reading"),
    "eat": ("eats", "ate", "eaten", "eating"),
    "drink": ("drinks", "drank", "drunk", "drinking"),
    "sleep": ("sleeps", "slept", "slept", "sleeping"),
    "speak": ("speaks", "spoke", "spoken", "speaking"),
    "sit": ("sits", "sat", "sat", "sitting"),
    "stand": ("stands", "stood", "stood", "standing"),
    "hear": ("hears", "heard", "heard", "hearing"),
    "feel": ("feels", "felt", "felt", "feeling"),
    "keep": ("keeps", "kept", "kept", "keeping"),
    "leave": ("leaves", "left", "left", "leaving"),
    "meet": ("meets", "met", "met", "meeting"),
    "pay": ("pays", "paid", "paid", "paying"),
    "send": ("sends", "sent", "sent", "sending"),
    "build": ("builds", "built", "built", "building"),
    "buy": ("buys", "bought", "bought", "buying"),
    "catch": ("catches", "caught", "caught", "catching"),
    "teach": ("teaches", "taught", "taught", "teaching"),
    "bring": ("brings", "brought", "brought", "bringing"),
    "begin": ("begins", "began", "begun", "beginning"),
    "swim": ("swims", "swam", "swum", "swimming"),
    "sing": ("sings", "sang", "sung", "singing"),
    "drive": ("drives", "drove", "driven", "driving"),
    "ride": ("rides", "rode", "ridden", "riding"),
    "fly": ("flies", "flew", "flown", "flying"),
    "fall": ("falls", "fell", "fallen", "falling"),
    "grow": ("grows", "grew", "grown", "growing"),
    "draw": ("draws", "drew", "drawn", "drawing"),
    "wear": ("wears", "wore", "worn", "wearing"),
    "win": ("wins", "won", "won", "winning"),
    "lose": ("loses", "lost", "lost", "losing"),
    "choose": ("chooses", "chose", "chosen", "choosing"),
    "forget": ("forgets", "forgot", "forgotten", "forgetting"),
    "understand": ("understands", "understood", "understood",
                   "understanding"),
    "hold": ("holds", "held", "held", "holding"),
    "break": ("breaks", "broke", "broken", "breaking"),
    "make": ("makes", "made", "made", "making"),
    "get": ("gets", "got", "got", "getting"),
    "put": ("puts", "put", "put", "putting"),
    "let": ("lets", "let", "let", "letting"),
    "cut": ("cuts", "cut", "cut", "cutting"),
}

REGULAR_VERBS = (
    "walk", "talk", "play", "work", "live", "open", "close", "start",
    "finish", "help", "learn", "visit", "watch", "listen", "look", "want",
    "use", "ask", "answer", "call", "clean", "cook", "dance", "paint",
    "plant", "push", "pull", "smile", "laugh", "cry", "jump", "move",
    "stay", "wait", "turn", "show", "follow", "carry", "study", "enjoy",
    "travel", "arrive", "explain", "describe", "discuss", "develop",
    "improve", "prepare", "present", "protect", "receive", "remember",
    "repeat", "deliver", "like", "love", "hate", "need", "hope", "wish",
    "plan", "try", "seem", "appear", "happen", "change", "return",
    "remain", "continue", "decide", "believe", "consider", "suggest",
    "mention", "notice", "realize", "recognize", "wonder", "worry",
    "collect", "compare", "complete", "contain", "count", "cover",
    "create", "cross", "deserve", "destroy", "discover", "divide",
    "earn", "encourage", "examine", "expect", "fill", "fix", "gather",
    "guess", "imagine", "include", "introduce", "invite", "join", "kick",
    "kiss", "knock", "land", "lift", "lock", "manage", "mark", "measure",
    "mix", "offer", "order", "pack", "pass", "pick", "point", "pour",
    "practice", "print", "promise", "raise", "reach", "record", "refuse",
    "relax", "remove", "rent", "repair", "replace", "reply", "report",
    "rest", "save", "search", "share", "shout", "sign", "slow", "sort",
    "spell", "stretch", "support", "surprise", "thank",
    "tie", "train", "treat", "trust", "warn", "wash",
    "welcome", "whisper", "correct",
)

ADJECTIVES = (
    "big", "small", "good", "bad", "happy", "sad", "old", "young", "new",
    "long", "short", "tall", "warm", "cold", "hot", "beautiful",
    "important", "difficult", "easy", "quiet", "loud", "interesting",
    "famous", "early", "late", "fast", "slow", "strong", "weak", "rich",
    "poor", "clean", "dirty", "dark", "bright", "heavy", "full", "empty",
    "kind", "friendly", "angry", "tired", "hungry", "thirsty", "busy",
    "free", "cheap", "expensive", "modern", "ancient", "local",
    "national", "foreign", "popular", "serious", "simple", "deep",
    "high", "low", "wide", "narrow", "soft", "hard", "sweet", "fresh",
    "dry", "wet", "healthy", "sick", "safe", "dangerous", "careful",
    "useful", "polite", "honest", "proud", "calm", "gentle", "clever",
    "wise", "brave", "lovely", "pleasant", "special", "strange", "usual",
    "common", "possible", "ready", "certain", "whole", "wonderful",
)

ADVERBS = (
    "quickly", "slowly", "carefully", "often", "always", "never",
    "sometimes", "usually", "here", "there", "today", "yesterday",
    "soon", "together", "again", "already", "suddenly", "finally",
    "quietly", "loudly", "happily", "sadly", "easily", "recently",
    "everywhere", "somewhere", "probably", "certainly", "clearly",
    "really", "early", "late", "well", "still",
)

PREPOSITIONS = (
    "in", "on", "at", "from", "with", "without", "about", "near",
    "under", "over", "behind", "between", "after", "before", "during",
    "through", "against", "across", "along", "around", "beside",
    "inside", "outside", "toward",
)

MODALS = ("will", "would", "can", "could", "may", "might", "must",
          "shall", "should")

COORDINATORS = ("and", "but", "or", "so", "yet")

SUBORDINATORS = (
    "because", "although", "while", "since", "when", "if", "unless",
    "until", "after", "before", "as", "whereas",
)

WH_WORDS = (
    ("what", "WP"), ("who", "WP"), ("where", "WRB"), ("why", "WRB"),
    ("how", "WRB"), ("which", "WDT"),
)

# connector -> tagged token sequence; the argumentative subset carries
# stance, the rest are additive/sequential
CONNECTORS = {
    "however": (("however", "RB"),),
    "therefore": (("therefore", "RB"),),
    "moreover": (("moreover", "RB"),),
    "furthermore": (("furthermore", "RB"),),
    "nevertheless": (("nevertheless", "RB"),),
    "meanwhile": (("meanwhile", "RB"),),
    "consequently": (("consequently", "RB"),),
    "finally": (("finally", "RB"),),
    "also": (("also", "RB"),),
    "besides": (("besides", "RB"),),
    "instead": (("instead", "RB"),),
    "otherwise": (("otherwise", "RB"),),
    "thus": (("thus", "RB"),),
    "then": (("then", "RB"),),
    "in addition": (("in", "IN"), ("addition", "NN")),
    "for example": (("for", "IN"), ("example", "NN")),
    "on the other hand": (("on", "IN"), ("the", "DT"),
                          ("other", "JJ"), ("hand", "NN")),
    "as a result": (("as", "IN"), ("a", "DT"), ("result", "NN")),
    "in fact": (("in", "IN"), ("fact", "NN")),
}

ARGUMENTATIVE = (
    "however", "therefore", "moreover", "furthermore", "nevertheless",
    "consequently", "thus", "as a result", "in fact",
)

STOPWORDS = (
    DETERMINERS + PRONOUNS_SG + PRONOUNS_PL + PRONOUNS_OBJ + POSSESSIVES
    + PREPOSITIONS + MODALS + COORDINATORS + SUBORDINATORS
    + ("to", "of", "for", "by", "into", "onto", "up", "down", "out", "off",
       "am", "is", "are", "was", "were", "be", "been", "being",
       "have", "has", "had", "having", "do", "does", "did", "doing",
       "not", "what", "who", "where", "why", "how", "which", "there",
       "here", "then", "than", "very", "just", "only", "both", "all",
       "more", "most", "other", "such", "own", "same")
)

PREFIXES = (
    "anti", "auto", "bi", "co", "counter", "de", "dis", "down", "en",
    "ex", "extra", "fore", "hyper", "il", "im", "in", "inter", "intra",
    "ir", "macro", "micro", "mid", "mini", "mis", "mono", "multi", "non",
    "out", "over", "post", "pre", "pro", "re", "semi", "sub", "super",
    "tele", "trans", "tri", "ultra", "un", "under", "up",
)

SUFFIXES = (
    "ability", "able", "ably", "age", "al", "ally", "ance", "ancy",
    "ant", "ary", "ate", "ation", "ative", "cy", "dom", "ed", "ee",
    "eer", "en", "ence", "ency", "ent", "er", "ery", "es", "ese",
    "esque", "ess", "est", "eth", "ette", "ful", "fy", "hood", "ial",
    "ian", "ible", "ibly", "ic", "ical", "ically", "ice", "ify", "ile",
    "ine", "ing", "ion", "ious", "ise", "ish", "ism", "ist", "ity",
    "ive", "ization", "ize", "less", "let", "like", "ling", "ly",
    "ment", "ness", "oid", "ology", "or", "ory", "ous", "s", "ship",
    "sion", "some", "th", "tion", "ty", "ure", "ward", "wards", "ware",
    "wise", "y",
)

_VOWELS = "aeiou"
_DOUBLE_FINAL_OK = frozenset("bdgmnprt")


def noun_plural(base):
    if base in IRREGULAR_PLURALS:
        return IRREGULAR_PLURALS[base]
    if base.endswith(("ch", "sh", "s", "x", "z", "o")):
        return base + "es"
    if base.endswith("y") and len(base) > 1 and base[-2] not in _VOWELS:
        return base[:-1] + "ies"
    return base + "s"


def _doubles_final(base):
    # single final consonant after a single vowel, short stem
    if len(base) < 3:
        return False
    a, b, c = base[-3], base[-2], base[-1]
    return (c in _DOUBLE_FINAL_OK and b in _VOWELS and a not in _VOWELS
            and len(base) <= 4)


def verb_forms(base):
    """(3sg, past, participle, gerund); participle == past for regulars."""
    irr = IRREGULAR_VERBS.get(base)
    if irr is not None:
        return irr
    if base.endswith(("ch", "sh", "ss", "x", "z", "o")):
        s3 = base + "es"
    elif base.endswith("y") and base[-2] not in _VOWELS:
        s3 = base[:-1] + "ies"
    else:
        s3 = base + "s"
    if base.endswith("e"):
        past = base + "d"
        ger = base[:-1] + "ing"
    elif base.endswith("y") and base[-2] not in _VOWELS:
        past = base[:-1] + "ied"
        ger = base + "ing"
    elif _doubles_final(base):
        past = base + base[-1] + "ed"
        ger = base + base[-1] + "ing"
    else:
        past = base + "ed"
        ger = base + "ing"
    return s3, past, past, ger


# --- rare pseudo-word stock ---------------------------------------------

_RARE_ONSETS = ("bl", "br", "cl", "cr", "dr", "fl", "gl", "gr", "pl",
                "pr", "sl", "sm", "sn", "sp", "st", "tr", "thr", "scr")
_RARE_NUCLEI = ("a", "e", "i", "o", "u", "ar", "er", "or", "ol", "an",
                "en", "on", "in", "un")
_RARE_LINKS = ("v", "m", "n", "l", "r", "d", "t", "p", "k")

_NOUN_TAILS = ("tion", "ness", "ment")
_VERB_TAILS = ("ize", "ate")
_ADJ_TAILS = ("ous", "ive", "al")
_ADV_TAIL = "ly"


def _pseudo_stem(i):
    onset = _RARE_ONSETS[i % len(_RARE_ONSETS)]
    i //= len(_RARE_ONSETS)
    nucleus = _RARE_NUCLEI[i % len(_RARE_NUCLEI)]
    i //= len(_RARE_NUCLEI)
    link = _RARE_LINKS[i % len(_RARE_LINKS)]
    return onset + nucleus + link


def rare_inventory(n_nouns=240, n_verbs=120, n_adjs=160, n_advs=80):
    """Deterministic pseudo-word stock keyed by part of speech.

    Returns {"noun": [(sing, plur)], "verb": [(base, 3sg, past, ger)],
    "adj": [adj], "adv": [adv]}; all surfaces are distinct from each
    other and (by construction of the tails) from the common inventory.
    """
    out = {"noun": [], "verb": [], "adj": [], "adv": []}
    seen = set()
    i = 0
    while len(out["noun"]) < n_nouns:
        word = _pseudo_stem(i) + _NOUN_TAILS[i % len(_NOUN_TAILS)]
        i += 1
        if word in seen:
            continue
        seen.add(word)
        out["noun"].append((word, noun_plural(word)))
    i = 0
    while len(out["verb"]) < n_verbs:
        word = _pseudo_stem(i * 7 + 3) + _VERB_TAILS[i % len(_VERB_TAILS)]
        i += 1
        if word in seen:
            continue
        seen.add(word)
        out["verb"].append((word, word + "s", word + "d", word[:-1] + "ing"))
    i = 0
    while len(out["adj"]) < n_adjs:
        word = _pseudo_stem(i * 11 + 5) + _ADJ_TAILS[i % len(_ADJ_TAILS)]
        i += 1
        if word in seen:
            continue
        seen.add(word)
        out["adj"].append(word)
    i = 0
    while len(out["adv"]) < n_advs:
        word = _pseudo_stem(i * 13 + 7) + _ADV_TAIL
        i += 1
        if word in seen:
            continue
        seen.add(word)
        out["adv"].append(word)
    return out


def common_surfaces():
    """Every surface form of the common inventory, deduplicated in a
    stable frequency-flavored order: function words first, then content
    words with their inflections."""
    ordered = []
    seen = set()

    def add(*words):
        for w in words:
            if w not in seen:
                seen.add(w)
                ordered.append(w)

    add("the", "a", "an", "to", "of", "and", "in", "is", "was", "that")
    add(*DETERMINERS)
    add(*PRONOUNS_SG, *PRONOUNS_PL, *PRONOUNS_OBJ, *POSSESSIVES)
    add("am", "are", "were", "be", "been", "being",
        "have", "has", "had", "having", "do", "does", "did", "doing",
        "not")
    add(*MODALS, *COORDINATORS, *SUBORDINATORS, *PREPOSITIONS)
    add("what", "who", "where", "why", "how", "which")
    for name, seq in CONNECTORS.items():
        add(*(w for w, _ in seq))
    for base in NOUNS:
        add(base)
        if base not in UNCOUNTABLE:
            add(noun_plural(base))
    for base in list(IRREGULAR_VERBS) + list(REGULAR_VERBS):
        if base == "be":
            continue
        s3, past, part, ger = verb_forms(base)
        add(base, s3, past, part, ger)
    add(*ADJECTIVES)
    add(*ADVERBS)
    return ordered


def verb_lemmas():
    """Common verb lemmas for the frequent-verb list.

    Includes the lemmatizer's image of every inflected form so that
    membership tests hit even where de-inflection and generation
    disagree on orthography.
    """
    from .lemmatizer import lemmatize

    lemmas = ["be"]
    seen = {"be"}
    for base in list(IRREGULAR_VERBS) + list(REGULAR_VERBS):
        if base == "be":
            continue
        candidates = [base]
        candidates.extend(lemmatize(f, "verb") for f in verb_forms(base))
        for candidate in candidates:
            if candidate not in seen:
                seen.add(candidate)
                lemmas.append(candidate)
    return lemmas
