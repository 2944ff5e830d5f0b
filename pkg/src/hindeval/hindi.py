"""METEOR-Hindi: LWG and POS matcher stages plus clause matching.

The LWG and POS stages run after exact/stem/synonym in the same sequential
pipeline. Clause matching is a diagnostic ratio that is blended into the
final score with weight ``MeteorConfig.clause_weight`` (0 by default).
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

from .matching import HINDI_STAGES, LocalWordGroup, MatchStage, lwg_match, lwg_split, pos_match
from .meteor import (Alignment, MeteorConfig, MeteorScore, aggregate, align, missing_flags,
                     score_alignment)
from .resources import ResourceSet, load_resource_dir, load_resources, stem_of
from .text import DANDA, DOUBLE_DANDA, Corpus, EvalUnit, Segment

__all__ = [
    "Clause", "LocalWordGroup", "ResourceSet", "clause_match_ratio", "clause_split",
    "hindi_stages", "load_resource_dir", "load_resources", "lwg_match", "lwg_split",
    "meteor_hindi", "meteor_hindi_corpus", "pos_match", "stem_of",
]

_BOUNDARIES = frozenset((DANDA, DOUBLE_DANDA))


@dataclass(frozen=True)
class Clause:
    start: int
    end: int
    contains_verb: bool

    def __len__(self):
        return self.end - self.start

    @property
    def indices(self) -> range:
        return range(self.start, self.end)


def _is_verb(word: str, resources: ResourceSet, prefix: str) -> bool:
    tag = resources.pos.get(word)
    return tag is not None and tag.startswith(prefix)


def clause_split(segment: Segment, resources: ResourceSet, verb_prefix: str = "V") -> list[Clause]:
    """Cut after each verb group and at each danda.

    Consecutive verb-tagged tokens (main verb plus auxiliaries) stay in one
    clause, and a danda directly after a verb closes that verb's clause.
    """
    words = segment.words
    clauses = []
    start = 0
    has_verb = False
    for k, w in enumerate(words):
        close = False
        if w in _BOUNDARIES:
            close = True
        elif _is_verb(w, resources, verb_prefix):
            has_verb = True
            nxt = words[k + 1] if k + 1 < len(words) else None
            close = nxt is None or (nxt not in _BOUNDARIES and not _is_verb(nxt, resources, verb_prefix))
        if close:
            clauses.append(Clause(start, k + 1, has_verb))
            start, has_verb = k + 1, False
    if start < len(words):
        clauses.append(Clause(start, len(words), has_verb))
    return clauses


def _clause_counts(segment: Segment, aligned: set[int], resources: ResourceSet,
                   verb_prefix: str) -> tuple[int, int]:
    clauses = clause_split(segment, resources, verb_prefix)
    matched = 0
    for cl in clauses:
        hit = sum(1 for i in cl.indices if i in aligned)
        verbs = [i for i in cl.indices if _is_verb(segment.words[i], resources, verb_prefix)]
        if 2 * hit >= len(cl) and all(v in aligned for v in verbs):
            matched += 1
    return matched, len(clauses)


def clause_match_ratio(unit: EvalUnit, alignment: Alignment, resources: ResourceSet,
                       verb_prefix: str = "V") -> float:
    """Share of candidate clauses with at least half their tokens and every verb aligned."""
    aligned = {c for c, _ in alignment.links}
    matched, total = _clause_counts(unit.candidate, aligned, resources, verb_prefix)
    return matched / total if total else 0.0


def hindi_stages(config: MeteorConfig) -> tuple[MatchStage, ...]:
    return tuple(sorted(set(config.stages) | {MatchStage.LWG, MatchStage.POS}))


def _blend(score: float, ratio: float, weight: float) -> float:
    if weight == 0:
        return score
    return score * (1 - weight) + ratio * weight


def _unit_with_counts(unit: EvalUnit, config: MeteorConfig, resources: ResourceSet):
    stages = hindi_stages(config)
    best = None
    for k, ref in enumerate(unit.references):
        al = align(unit.candidate, ref, stages, resources, k)
        base = score_alignment(unit, al, config)
        counts = _clause_counts(unit.candidate, {c for c, _ in al.links}, resources, config.verb_prefix)
        ratio = counts[0] / counts[1] if counts[1] else 0.0
        final = _blend(base.score, ratio, config.clause_weight)
        if best is None or final > best[0].score:
            best = (replace(base, score=final, clause_match=ratio), counts)
    score, counts = best
    return replace(score, flags=score.flags + missing_flags(stages, resources)), counts


def meteor_hindi(unit: EvalUnit, config: MeteorConfig = MeteorConfig(),
                 resources: Optional[ResourceSet] = None) -> MeteorScore:
    """METEOR with the exact, stem, synonym, LWG and POS stages in sequence.

    With empty resources this reproduces :func:`meteor_unit` exactly.
    """
    return _unit_with_counts(unit, config, resources or ResourceSet())[0]


def meteor_hindi_corpus(corpus, config: MeteorConfig = MeteorConfig(),
                        resources: Optional[ResourceSet] = None) -> MeteorScore:
    resources = resources or ResourceSet()
    units = corpus.units if isinstance(corpus, Corpus) else tuple(corpus)
    results = [_unit_with_counts(u, config, resources) for u in units]
    # aggregate() recomputes from raw counts, so the per-unit blend does not leak in
    agg = aggregate([s for s, _ in results], config)
    matched = sum(c[0] for _, c in results)
    total = sum(c[1] for _, c in results)
    ratio = matched / total if total else 0.0
    return replace(agg, score=_blend(agg.score, ratio, config.clause_weight), clause_match=ratio)
