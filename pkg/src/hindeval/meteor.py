"""Staged unigram alignment and METEOR scoring."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Optional, Sequence

from .matching import BASE_STAGES, STAGE_TABLE, MatchStage, Pair, match_stage
from .resources import ResourceSet
from .text import Corpus, EvalUnit, Segment

FMEAN_MODES = ("recall-weighted", "harmonic")


@dataclass(frozen=True)
class MeteorConfig:
    stages: tuple[MatchStage, ...] = BASE_STAGES
    fmean: str = "recall-weighted"
    gamma: float = 0.5
    beta: float = 3.0
    clause_weight: float = 0.0
    verb_prefix: str = "V"

    def __post_init__(self):
        stages = tuple(sorted({MatchStage.parse(s) if isinstance(s, str) else MatchStage(s) for s in self.stages}))
        object.__setattr__(self, "stages", stages)
        if self.fmean not in FMEAN_MODES:
            raise ValueError(f"unknown fmean mode {self.fmean!r}; expected one of {FMEAN_MODES}")
        if not 0 <= self.gamma <= 1:
            raise ValueError(f"gamma must lie in [0, 1], got {self.gamma}")
        if self.beta <= 0:
            raise ValueError(f"beta must be positive, got {self.beta}")
        if not 0 <= self.clause_weight <= 1:
            raise ValueError(f"clause weight must lie in [0, 1], got {self.clause_weight}")

    def with_stages(self, stages) -> "MeteorConfig":
        return replace(self, stages=tuple(stages))

    def as_dict(self) -> dict:
        return {
            "stages": [s.label for s in self.stages],
            "fmean": self.fmean,
            "gamma": self.gamma,
            "beta": self.beta,
            "clause_weight": self.clause_weight,
            "verb_prefix": self.verb_prefix,
        }


@dataclass(frozen=True)
class Alignment:
    pairs: tuple[tuple[int, int, MatchStage], ...]
    ref_choice: int = 0

    def __len__(self):
        return len(self.pairs)

    @property
    def links(self) -> tuple[Pair, ...]:
        return tuple((c, r) for c, r, _ in self.pairs)

    @property
    def crossings(self) -> int:
        return crossing_count(self.links)

    @property
    def chunks(self) -> int:
        return count_chunks(self)

    def histogram(self) -> dict[str, int]:
        out = {s.label: 0 for s in MatchStage}
        for _, _, s in self.pairs:
            out[s.label] += 1
        return out


@dataclass(frozen=True)
class MeteorScore:
    matches: int
    cand_len: int
    ref_len: int
    precision: float
    recall: float
    fmean: float
    chunks: int
    penalty: float
    score: float
    stage_histogram: dict = field(default_factory=dict)
    alignment: Optional[Alignment] = None
    clause_match: Optional[float] = None
    flags: tuple[str, ...] = ()

    def as_dict(self) -> dict:
        d = {
            "score": self.score,
            "matches": self.matches,
            "cand_len": self.cand_len,
            "ref_len": self.ref_len,
            "precision": self.precision,
            "recall": self.recall,
            "fmean": self.fmean,
            "chunks": self.chunks,
            "penalty": self.penalty,
            "stage_histogram": dict(self.stage_histogram),
            "flags": list(self.flags),
        }
        if self.clause_match is not None:
            d["clause_match"] = self.clause_match
        return d


def crossing_count(links: Iterable[Pair]) -> int:
    links = list(links)
    n = 0
    for k, (i, j) in enumerate(links):
        for i2, j2 in links[k + 1:]:
            if (i - i2) * (j - j2) < 0:
                n += 1
    return n


def count_chunks(alignment) -> int:
    """Number of maximal runs of links that are adjacent in both sentences."""
    links = sorted(getattr(alignment, "links", alignment))
    if not links:
        return 0
    chunks = 1
    for (i, j), (i2, j2) in zip(links, links[1:]):
        if not (i2 == i + 1 and j2 == j + 1):
            chunks += 1
    return chunks


def _max_matching_size(by_cand: dict[int, list[int]]) -> int:
    """Maximum bipartite matching size by augmenting paths."""
    owner: dict[int, int] = {}

    def augment(i, seen):
        for j in by_cand[i]:
            if j in seen:
                continue
            seen.add(j)
            if j not in owner or augment(owner[j], seen):
                owner[j] = i
                return True
        return False

    return sum(augment(i, set()) for i in by_cand)


def _select_stage(pairs: Iterable[Pair], fixed: Sequence[Pair]) -> list[Pair]:
    """Maximum-cardinality injective subset of ``pairs`` with fewest crossings.

    Crossings are counted against ``fixed`` links too. Among optima the
    lexicographically smallest sorted pair list wins.
    """
    by_cand: dict[int, list[int]] = {}
    for i, j in pairs:
        by_cand.setdefault(i, []).append(j)
    if not by_cand:
        return []
    for i in by_cand:
        by_cand[i] = sorted(set(by_cand[i]))
    target_size = _max_matching_size(by_cand)
    rows = sorted(by_cand)
    refs = sorted({j for js in by_cand.values() for j in js})
    bit = {j: b for b, j in enumerate(refs)}
    options = []
    row_masks = []
    for i in rows:
        opts = []
        for j in by_cand[i]:
            cost = sum(1 for a, b in fixed if (i - a) * (j - b) < 0)
            opts.append((j, bit[j], cost))
        options.append(opts)
        row_masks.append(sum(1 << bit[j] for j in by_cand[i]))

    n_rows = len(rows)
    memo: dict[tuple[int, int], Optional[tuple[int, int]]] = {}

    def reachable(k: int, mask: int) -> bool:
        # optimistic bound: remaining rows with a free option, capped by free refs they touch
        free_rows = 0
        free_refs = 0
        for m in row_masks[k:]:
            m &= ~mask
            if m:
                free_rows += 1
                free_refs |= m
        return mask.bit_count() + min(free_rows, free_refs.bit_count()) >= target_size

    # a new link (i, j) crosses every earlier link (i' < i) whose ref index exceeds j,
    # so the suffix optimum depends only on the set of used ref positions
    def best(k: int, mask: int) -> Optional[tuple[int, int]]:
        key = (k, mask)
        if key in memo:
            return memo[key]
        if k == n_rows:
            res = (0, 0) if mask.bit_count() == target_size else None
        elif not reachable(k, mask):
            res = None
        else:
            res = None
            for _, b, cost in options[k]:
                if mask >> b & 1:
                    continue
                sub = best(k + 1, mask | 1 << b)
                if sub is not None:
                    cross = sub[1] + (mask >> (b + 1)).bit_count() + cost
                    if res is None or cross < res[1]:
                        res = (sub[0] + 1, cross)
            sub = best(k + 1, mask)
            if sub is not None and (res is None or sub[1] < res[1]):
                res = sub
        memo[key] = res
        return res

    chosen = []
    mask = 0
    target = best(0, 0)
    for k, i in enumerate(rows):
        for j, b, cost in options[k]:
            if mask >> b & 1:
                continue
            sub = best(k + 1, mask | 1 << b)
            if sub is not None and sub[1] + (mask >> (b + 1)).bit_count() + cost == target[1]:
                chosen.append((i, j))
                mask |= 1 << b
                target = sub
                break
    return chosen


def select_alignment(stage_pairs: Sequence[tuple[MatchStage, Iterable[Pair]]],
                     cand_len: int, ref_len: int, ref_choice: int = 0) -> Alignment:
    """Choose links stage by stage over positions left unmapped by earlier stages."""
    used_c: set[int] = set()
    used_r: set[int] = set()
    links: list[Pair] = []
    out: list[tuple[int, int, MatchStage]] = []
    for stage, pairs in stage_pairs:
        free = [(i, j) for i, j in pairs
                if i not in used_c and j not in used_r and 0 <= i < cand_len and 0 <= j < ref_len]
        for i, j in _select_stage(free, links):
            used_c.add(i)
            used_r.add(j)
            links.append((i, j))
            out.append((i, j, MatchStage(stage)))
    out.sort()
    return Alignment(tuple(out), ref_choice)


def align(cand: Segment, ref: Segment, stages=BASE_STAGES, resources: Optional[ResourceSet] = None,
          ref_choice: int = 0) -> Alignment:
    resources = resources or ResourceSet()
    stage_pairs = [(s, match_stage(cand, ref, s, resources)) for s in sorted(MatchStage(s) for s in stages)]
    return select_alignment(stage_pairs, len(cand), len(ref), ref_choice)


def _fmean(p: float, r: float, mode: str) -> float:
    if p == 0 or r == 0:
        return 0.0
    if mode == "harmonic":
        return 2 * p * r / (p + r)
    return 10 * p * r / (r + 9 * p)


def compose(matches: int, cand_len: int, ref_len: int, chunks: int, config: MeteorConfig = MeteorConfig(),
            **extra) -> MeteorScore:
    """Precision, recall, F-mean, fragmentation penalty and score from raw counts."""
    if matches > min(cand_len, ref_len) or (matches and not 1 <= chunks <= matches):
        raise ValueError(f"inconsistent statistics m={matches} c={cand_len} r={ref_len} chunks={chunks}")
    if matches == 0:
        return MeteorScore(0, cand_len, ref_len, 0.0, 0.0, 0.0, 0, 0.0, 0.0, **extra)
    p = matches / cand_len
    r = matches / ref_len
    fm = _fmean(p, r, config.fmean)
    penalty = config.gamma * (chunks / matches) ** config.beta
    return MeteorScore(matches, cand_len, ref_len, p, r, fm, chunks, penalty, fm * (1 - penalty), **extra)


def missing_flags(stages, resources: ResourceSet) -> tuple[str, ...]:
    tables = sorted({STAGE_TABLE[s] for s in stages if s in STAGE_TABLE})
    return tuple(f"resource-missing:{t}" for t in tables if resources.missing(t))


def score_alignment(unit: EvalUnit, alignment: Alignment, config: MeteorConfig) -> MeteorScore:
    cand = unit.candidate
    ref = unit.references[alignment.ref_choice]
    flags = ("degenerate-input",) if not len(cand) or not len(ref) else ()
    return compose(len(alignment), len(cand), len(ref), count_chunks(alignment), config,
                   stage_histogram=alignment.histogram(), alignment=alignment, flags=flags)


def _best_reference(scored: Sequence[MeteorScore]) -> MeteorScore:
    best = scored[0]
    for s in scored[1:]:
        if s.score > best.score:
            best = s
    return best


def meteor_unit(unit: EvalUnit, config: MeteorConfig = MeteorConfig(),
                resources: Optional[ResourceSet] = None) -> MeteorScore:
    """Align against each reference independently and keep the best-scoring one."""
    resources = resources or ResourceSet()
    scored = [
        score_alignment(unit, align(unit.candidate, ref, config.stages, resources, k), config)
        for k, ref in enumerate(unit.references)
    ]
    best = _best_reference(scored)
    flags = best.flags + missing_flags(config.stages, resources)
    return replace(best, flags=flags)


def aggregate(scores: Sequence[MeteorScore], config: MeteorConfig) -> MeteorScore:
    """Corpus score recomputed from summed m, lengths and chunks."""
    if not scores:
        raise ValueError("empty corpus")
    m = sum(s.matches for s in scores)
    c = sum(s.cand_len for s in scores)
    r = sum(s.ref_len for s in scores)
    ch = sum(s.chunks for s in scores)
    hist: dict[str, int] = {st.label: 0 for st in MatchStage}
    for s in scores:
        for k, v in s.stage_histogram.items():
            hist[k] = hist.get(k, 0) + v
    flags = sorted({f for s in scores for f in s.flags})
    return compose(m, c, r, ch, config, stage_histogram=hist, flags=tuple(flags))


def meteor_corpus(corpus, config: MeteorConfig = MeteorConfig(),
                  resources: Optional[ResourceSet] = None) -> MeteorScore:
    units = corpus.units if isinstance(corpus, Corpus) else tuple(corpus)
    return aggregate([meteor_unit(u, config, resources) for u in units], config)
