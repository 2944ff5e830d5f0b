"""N-gram statistics and BLEU at corpus and sentence level."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .text import Corpus, EvalUnit, Segment

SMOOTHING_MODES = ("none", "add-one-high-order")


@dataclass(frozen=True)
class NGramCounts:
    order: int
    counts: Counter

    @property
    def total(self) -> int:
        return sum(self.counts.values())


@dataclass(frozen=True)
class PrecisionStat:
    order: int
    matched: int
    total: int

    def __post_init__(self):
        if not 0 <= self.matched <= self.total:
            raise ValueError(f"need 0 <= matched <= total, got {self.matched}/{self.total}")

    @property
    def value(self) -> Optional[float]:
        """matched/total, or None when the candidate side has no n-grams of this order."""
        if self.total == 0:
            return None
        return self.matched / self.total

    @property
    def defined(self) -> bool:
        return self.total > 0


@dataclass(frozen=True)
class BleuScore:
    max_n: int
    weights: tuple[float, ...]
    precisions: tuple[PrecisionStat, ...]
    bp: float
    cand_len: int
    ref_len: int
    score: float
    smoothing: str = "none"
    # weighted orders with no candidate n-grams; dropped from the geometric mean
    undefined_orders: tuple[int, ...] = field(default=())

    @property
    def warning(self) -> bool:
        return bool(self.undefined_orders)

    def as_dict(self) -> dict:
        return {
            "score": self.score,
            "bp": self.bp,
            "cand_len": self.cand_len,
            "ref_len": self.ref_len,
            "max_n": self.max_n,
            "weights": list(self.weights),
            "smoothing": self.smoothing,
            "precisions": [
                {"order": p.order, "matched": p.matched, "total": p.total, "value": p.value}
                for p in self.precisions
            ],
            "undefined_orders": list(self.undefined_orders),
        }


def _words(seg) -> Sequence[str]:
    if isinstance(seg, Segment):
        return seg.words
    return seg


def extract_ngrams(segment, n: int) -> NGramCounts:
    if n < 1:
        raise ValueError(f"n-gram order must be >= 1, got {n}")
    w = _words(segment)
    return NGramCounts(n, Counter(tuple(w[i:i + n]) for i in range(len(w) - n + 1)))


def clipped_matches(cand: NGramCounts, refs: Iterable[NGramCounts]) -> int:
    """Candidate n-gram count, each clipped to its largest count in any one reference."""
    refs = list(refs)
    for r in refs:
        if r.order != cand.order:
            raise ValueError(f"order mismatch: candidate {cand.order}, reference {r.order}")
    matched = 0
    for gram, c in cand.counts.items():
        best = max((r.counts.get(gram, 0) for r in refs), default=0)
        matched += min(c, best)
    return matched


def _unit_stat(unit: EvalUnit, n: int) -> tuple[int, int]:
    cand = extract_ngrams(unit.candidate, n)
    refs = [extract_ngrams(r, n) for r in unit.references]
    return clipped_matches(cand, refs), cand.total


def modified_precision(corpus, n: int) -> PrecisionStat:
    units = _as_units(corpus)
    matched = total = 0
    for u in units:
        m, t = _unit_stat(u, n)
        matched += m
        total += t
    return PrecisionStat(n, matched, total)


def brevity_penalty(cand_len: int, ref_len: int) -> float:
    if cand_len < 0 or ref_len < 0:
        raise ValueError("lengths must be non-negative")
    if cand_len >= ref_len:
        return 1.0
    if cand_len == 0:
        return 0.0
    return math.exp(1.0 - ref_len / cand_len)


def effective_ref_len(unit: EvalUnit) -> int:
    """Length of the reference closest to the candidate; ties go to the shorter one."""
    c = len(unit.candidate)
    return min((len(r) for r in unit.references), key=lambda r: (abs(r - c), r))


def _as_units(corpus) -> tuple[EvalUnit, ...]:
    if isinstance(corpus, EvalUnit):
        return (corpus,)
    units = tuple(corpus.units if isinstance(corpus, Corpus) else corpus)
    if not units:
        raise ValueError("empty corpus")
    return units


def _check_weights(max_n: int, weights) -> tuple[float, ...]:
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    if weights is None:
        return (1.0 / max_n,) * max_n
    weights = tuple(float(w) for w in weights)
    if len(weights) != max_n:
        raise ValueError(f"expected {max_n} weights, got {len(weights)}")
    if any(w < 0 for w in weights) or not math.isclose(sum(weights), 1.0, abs_tol=1e-9):
        raise ValueError(f"weights must be non-negative and sum to 1, got {weights}")
    return weights


def _compose(stats, weights, c, r, smoothing, max_n) -> BleuScore:
    if smoothing not in SMOOTHING_MODES:
        raise ValueError(f"unknown smoothing {smoothing!r}; expected one of {SMOOTHING_MODES}")
    bp = brevity_penalty(c, r)
    undefined = tuple(p.order for p, w in zip(stats, weights) if w > 0 and not p.defined)
    active = [(p, w) for p, w in zip(stats, weights) if p.defined and w > 0]
    wsum = sum(w for _, w in active)
    log_sum = 0.0
    score = 0.0
    if active and bp > 0 and wsum > 0:
        for p, w in active:
            m, t = p.matched, p.total
            if smoothing == "add-one-high-order" and p.order >= 2:
                m, t = m + 1, t + 1
            if m == 0:
                break
            log_sum += (w / wsum) * math.log(m / t)
        else:
            score = min(1.0, bp * math.exp(log_sum))
    return BleuScore(max_n, tuple(weights), tuple(stats), bp, c, r, score, smoothing, undefined)


def bleu_corpus(corpus, max_n: int = 4, weights=None, smoothing: str = "none") -> BleuScore:
    """Corpus BLEU: summed clipped counts per order, weighted geometric mean, brevity penalty."""
    weights = _check_weights(max_n, weights)
    units = _as_units(corpus)
    matched = [0] * max_n
    total = [0] * max_n
    c = r = 0
    for u in units:
        c += len(u.candidate)
        r += effective_ref_len(u)
        for n in range(1, max_n + 1):
            m, t = _unit_stat(u, n)
            matched[n - 1] += m
            total[n - 1] += t
    stats = [PrecisionStat(n, matched[n - 1], total[n - 1]) for n in range(1, max_n + 1)]
    return _compose(stats, weights, c, r, smoothing, max_n)


def bleu_sentence(unit: EvalUnit, max_n: int = 4, weights=None, smoothing: str = "none") -> BleuScore:
    return bleu_corpus((unit,), max_n, weights, smoothing)


def ngram_curve(unit_or_corpus, max_n: int = 4, smoothing: str = "none") -> list[BleuScore]:
    """One score per order n = 1..max_n, each using only the order-n precision."""
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    out = []
    for n in range(1, max_n + 1):
        w = [0.0] * n
        w[-1] = 1.0
        out.append(bleu_corpus(unit_or_corpus, n, w, smoothing))
    return out
