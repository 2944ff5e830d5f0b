"""Toy lexicons and a small synthetic Hindi corpus for tests and demos.

The lexicons are hand-written (a few dozen entries per table) and are not a
substitute for real stemmers, WordNets or taggers.
"""

from __future__ import annotations

import random
from importlib import resources as _res
from pathlib import Path

from .resources import ResourceSet, load_resource_dir
from .text import Corpus

SUBJECTS = ["सीता", "राम", "मोहन", "गीता", "लड़के", "बच्चे"]
OWNERS = ["राम", "सीता", "राजा", "माँ", "दोस्त"]
PLACES = ["बाज़ार", "घर", "विद्यालय", "शहर", "गाँव", "कमरे"]
ADJECTIVES = ["मीठा", "बड़ा", "छोटा", "नया", "लाल", "पुराना", "सुंदर"]
OBJECT_VERBS = [
    ("आम", "खाया"), ("सेब", "खाया"), ("रोटी", "खाई"), ("किताब", "पढ़ी"),
    ("पुस्तक", "पढ़ी"), ("चिट्ठी", "लिखी"), ("पत्र", "लिखा"), ("पेड़", "देखा"),
    ("दूध", "पिया"), ("खाना", "खाया"),
]
# same-tag substitutes that are neither synonyms nor inflections
NOUN_SWAPS = {"आम": "सेब", "सेब": "आम", "रोटी": "खाना", "दूध": "पानी", "पेड़": "घर"}


def data_dir() -> Path:
    return Path(str(_res.files("hindeval") / "data"))


def toy_resources() -> ResourceSet:
    return load_resource_dir(data_dir())


def _synonym(word: str, res: ResourceSet, rng: random.Random) -> str:
    options = sorted(w for s in res.synsets if word in s for w in s if w != word)
    return rng.choice(options) if options else word


def _inflect(word: str, res: ResourceSet, rng: random.Random) -> str:
    stem = res.stems.get(word)
    options = sorted(w for w, s in res.stems.items() if s == stem and w != word) if stem else []
    return rng.choice(options) if options else word


def desk_lines(n: int = 50, seed: int = 0, resources: ResourceSet | None = None):
    """Return (candidates, references) as parallel lists of sentences.

    Each reference follows ``SUBJ ने [OWNER के] PLACE में ADJ OBJ VERB ।``
    (owner group on about half the lines). Each candidate gets one to three
    perturbations: synonym substitution, inflection change, swapping the
    subject and place groups, a same-tag noun swap, or changing के to का/की.
    """
    res = resources or toy_resources()
    rng = random.Random(seed)
    cands, refs = [], []
    for _ in range(n):
        subj = rng.choice(SUBJECTS)
        obj, verb = rng.choice(OBJECT_VERBS)
        ref = [[subj, "ने"], [rng.choice(PLACES), "में"], [rng.choice(ADJECTIVES)], [obj], [verb], ["।"]]
        if rng.random() < 0.5:
            ref.insert(1, [rng.choice(OWNERS), "के"])
        pos = {name: k for k, name in enumerate(_slots(len(ref)))}
        cand = [list(g) for g in ref]
        ops = rng.sample(["synonym", "inflect", "reorder", "swap", "agree"], rng.randint(1, 3))
        for op in ops:
            if op == "synonym":
                for g in rng.sample([pos["place"], pos["obj"]], 2):
                    new = _synonym(cand[g][0], res, rng)
                    if new != cand[g][0]:
                        cand[g][0] = new
                        break
            elif op == "inflect":
                g = rng.choice([pos["adj"], pos["verb"]])
                cand[g][0] = _inflect(cand[g][0], res, rng)
            elif op == "reorder":
                a, b = pos["subj"], pos["place"]
                cand[a], cand[b] = cand[b], cand[a]
            elif op == "swap":
                g = pos["obj"]
                cand[g][0] = NOUN_SWAPS.get(cand[g][0], cand[g][0])
            elif op == "agree" and "owner" in pos:
                cand[pos["owner"]][1] = rng.choice(["का", "की"])
        refs.append(" ".join(w for g in ref for w in g))
        cands.append(" ".join(w for g in cand for w in g))
    return cands, refs


def _slots(n_groups: int):
    if n_groups == 7:
        return ("subj", "owner", "place", "adj", "obj", "verb", "end")
    return ("subj", "place", "adj", "obj", "verb", "end")


def desk_corpus(n: int = 50, seed: int = 0, resources: ResourceSet | None = None) -> Corpus:
    cands, refs = desk_lines(n, seed, resources)
    return Corpus.from_texts(cands, refs)
