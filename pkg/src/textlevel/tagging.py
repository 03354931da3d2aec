"""Part-of-speech tagging with an averaged perceptron.

Greedy left-to-right decoding over suffix, shape, and context features.
Training is deterministic for a given seed, and a saved model reloads to
identical predictions.
"""

import json
import os
import random
from collections import defaultdict

MODEL_VERSION = 1


def default_tagger_path():
    """Path of the tagger model shipped with the package."""
    return os.path.join(os.path.dirname(__file__), "data", "tagger_default.json")

START = ("-S1-", "-S2-")
END = ("-E1-", "-E2-")


def _normalize(word):
    if any(c.isdigit() for c in word):
        return "!DIGIT" if word.isdigit() else "!MIXED"
    return word.lower()


def _shape(word):
    if word.isdigit():
        return "d"
    if word[:1].isupper():
        return "Xx" if word[1:].islower() else "XX"
    if any(c.isdigit() for c in word):
        return "xd"
    return "x"


def _features(i, word, context, prev, prev2):
    # context is padded by two slots on each side
    feats = defaultdict(float)

    def add(name, *args):
        feats[" ".join((name,) + args)] += 1.0

    j = i + 2
    add("bias")
    add("w", context[j])
    add("suf3", context[j][-3:])
    add("suf2", context[j][-2:])
    add("pre1", context[j][:1])
    add("shape", _shape(word))
    add("t-1", prev)
    add("t-2", prev2)
    add("t-1 t-2", prev, prev2)
    add("t-1 w", prev, context[j])
    add("w-1", context[j - 1])
    add("w-1 suf3", context[j - 1][-3:])
    add("w-2", context[j - 2])
    add("w+1", context[j + 1])
    add("w+1 suf3", context[j + 1][-3:])
    add("w+2", context[j + 2])
    return feats


class PerceptronTagger:
    def __init__(self):
        self.weights = {}
        self.classes = set()
        self.tagdict = {}
        self._totals = defaultdict(float)
        self._tstamps = defaultdict(int)
        self._updates = 0

    def _score(self, feats):
        scores = defaultdict(float)
        for feat, value in feats.items():
            if feat not in self.weights:
                continue
            for tag, weight in self.weights[feat].items():
                scores[tag] += value * weight
        # deterministic argmax: score first, then tag name
        return max(self.classes, key=lambda t: (scores[t], t))

    def tag(self, words):
        """Tags for a list of surface tokens."""
        prev, prev2 = START
        context = list(START) + [_normalize(w) for w in words] + list(END)
        tags = []
        for i, word in enumerate(words):
            tag = self.tagdict.get(_normalize(word))
            if tag is None:
                feats = _features(i, word, context, prev, prev2)
                tag = self._score(feats)
            tags.append(tag)
            prev2 = prev
            prev = tag
        return tags

    def _update(self, truth, guess, feats):
        self._updates += 1
        if truth == guess:
            return
        for feat in feats:
            weights = self.weights.setdefault(feat, {})
            for tag, delta in ((truth, 1.0), (guess, -1.0)):
                key = (feat, tag)
                self._totals[key] += (self._updates - self._tstamps[key]) * weights.get(tag, 0.0)
                self._tstamps[key] = self._updates
                weights[tag] = weights.get(tag, 0.0) + delta

    def _average(self):
        for feat, weights in self.weights.items():
            for tag, weight in list(weights.items()):
                key = (feat, tag)
                total = self._totals[key] + (self._updates - self._tstamps[key]) * weight
                averaged = total / self._updates
                if averaged:
                    weights[tag] = averaged
                else:
                    del weights[tag]

    def _build_tagdict(self, sentences):
        counts = defaultdict(lambda: defaultdict(int))
        for words, tags in sentences:
            for word, tag in zip(words, tags):
                counts[_normalize(word)][tag] += 1
        for word, tag_counts in counts.items():
            tag, count = max(tag_counts.items(), key=lambda kv: (kv[1], kv[0]))
            n = sum(tag_counts.values())
            if n >= 5 and count / n >= 0.99:
                self.tagdict[word] = tag

    def train(self, sentences, epochs=8, seed=1):
        """Train on (words, tags) pairs. Deterministic for a given seed."""
        sentences = list(sentences)
        for _, tags in sentences:
            self.classes.update(tags)
        self._build_tagdict(sentences)
        rng = random.Random(seed)
        for _ in range(epochs):
            rng.shuffle(sentences)
            for words, tags in sentences:
                prev, prev2 = START
                context = list(START) + [_normalize(w) for w in words] + list(END)
                for i, word in enumerate(words):
                    guess = self.tagdict.get(_normalize(word))
                    if guess is None:
                        feats = _features(i, word, context, prev, prev2)
                        guess = self._score(feats)
                        self._update(tags[i], guess, feats)
                    prev2 = prev
                    prev = guess
        self._average()
        return self

    def save(self, path):
        payload = {
            "version": MODEL_VERSION,
            "classes": sorted(self.classes),
            "tagdict": self.tagdict,
            "weights": self.weights,
        }
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, sort_keys=True, separators=(",", ":"))

    @classmethod
    def load(cls, path):
        with open(path, "r", encoding="utf-8") as fh:
            payload = json.load(fh)
        if payload.get("version") != MODEL_VERSION:
            raise ValueError(
                "unsupported tagger model version: %r" % payload.get("version")
            )
        tagger = cls()
        tagger.classes = set(payload["classes"])
        tagger.tagdict = payload["tagdict"]
        tagger.weights = payload["weights"]
        return tagger


def coarse_pos(tag):
    """Penn tag -> coarse class for the lemmatizer."""
    if tag.startswith("N"):
        return "noun"
    if tag.startswith("V") or tag == "MD":
        return "verb"
    if tag.startswith("J"):
        return "adj"
    if tag.startswith("R"):
        return "adv"
    return "other"
