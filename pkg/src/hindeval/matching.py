"""Matcher stages that propose candidate/reference unigram pairs.

Each stage only proposes pairs; choosing an injective subset is the job of
:func:`hindeval.meteor.select_alignment`.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional

from .resources import ResourceSet, stem_of
from .text import Segment, Token

Pair = tuple[int, int]


class MatchStage(enum.IntEnum):
    EXACT = 1
    STEM = 2
    SYNONYM = 3
    LWG = 4
    POS = 5

    @property
    def label(self) -> str:
        return self.name.lower()

    @classmethod
    def parse(cls, name: str) -> "MatchStage":
        try:
            return cls[name.strip().upper()]
        except KeyError:
            valid = ", ".join(s.label for s in cls)
            raise ValueError(f"unknown stage {name!r}; valid stages: {valid}") from None


BASE_STAGES = (MatchStage.EXACT, MatchStage.STEM, MatchStage.SYNONYM)
HINDI_STAGES = tuple(MatchStage)

# table each stage depends on
STAGE_TABLE = {
    MatchStage.STEM: "stems",
    MatchStage.SYNONYM: "synsets",
    MatchStage.LWG: "function_words",
    MatchStage.POS: "pos",
}


@dataclass(frozen=True)
class LocalWordGroup:
    content: Optional[Token]
    attached: tuple[Token, ...] = ()

    @property
    def headless(self) -> bool:
        return self.content is None

    @property
    def tokens(self) -> tuple[Token, ...]:
        head = () if self.content is None else (self.content,)
        return head + self.attached

    def __len__(self):
        return len(self.tokens)


def lwg_split(segment: Segment, resources: ResourceSet) -> list[LocalWordGroup]:
    """Group each content word with the function words that follow it."""
    groups: list[LocalWordGroup] = []
    content = None
    attached: list[Token] = []
    for tok in segment:
        if resources.is_function_word(tok.surface):
            attached.append(tok)
            continue
        if content is not None or attached:
            groups.append(LocalWordGroup(content, tuple(attached)))
        content, attached = tok, []
    if content is not None or attached:
        groups.append(LocalWordGroup(content, tuple(attached)))
    return groups


def _content_equivalent(a: str, b: str, resources: ResourceSet) -> bool:
    if a == b:
        return True
    sa, sb = resources.stems.get(a, a), resources.stems.get(b, b)
    return sa == sb or resources.synonyms(a, b) or resources.synonyms(sa, sb)


def lwg_match(cand_groups: Iterable[LocalWordGroup], ref_groups: Iterable[LocalWordGroup],
              resources: ResourceSet) -> set[Pair]:
    """Token pairs from group pairs with equivalent heads and equal function-word stems.

    Heads are equivalent when they share a surface, a stem or a synset.
    Attached function words are compared as multisets of stems.
    """
    ref_groups = [g for g in ref_groups if not g.headless]
    ref_fw = [Counter(stem_of(t, resources) for t in g.attached) for g in ref_groups]
    pairs: set[Pair] = set()
    for cg in cand_groups:
        if cg.headless:
            continue
        c_fw = Counter(stem_of(t, resources) for t in cg.attached)
        for rg, r_fw in zip(ref_groups, ref_fw):
            if c_fw != r_fw:
                continue
            if not _content_equivalent(cg.content.surface, rg.content.surface, resources):
                continue
            pairs.add((cg.content.index, rg.content.index))
            used: set[int] = set()
            for ct in cg.attached:
                cs = stem_of(ct, resources)
                for rt in rg.attached:
                    if rt.index not in used and stem_of(rt, resources) == cs:
                        used.add(rt.index)
                        pairs.add((ct.index, rt.index))
                        break
    return pairs


def pos_match(cand: Segment, ref: Segment, resources: ResourceSet) -> set[Pair]:
    tags = resources.pos
    return {
        (c.index, r.index)
        for c in cand if c.surface in tags
        for r in ref if tags.get(r.surface) == tags[c.surface]
    }


def match_stage(cand: Segment, ref: Segment, stage: MatchStage, resources: Optional[ResourceSet] = None,
                cand_free: Optional[Iterable[int]] = None, ref_free: Optional[Iterable[int]] = None) -> set[Pair]:
    """All (cand_index, ref_index) pairs that ``stage`` considers equivalent.

    A stage whose resource table is missing proposes nothing. Stem and synonym
    stages skip function words; those are only credited inside a matching LWG.
    ``cand_free``/``ref_free`` restrict the result to still-unmapped positions.
    """
    resources = resources or ResourceSet()
    stage = MatchStage(stage)
    table = STAGE_TABLE.get(stage)
    if table is not None and resources.missing(table):
        return set()

    if stage is MatchStage.EXACT:
        pairs = {(c.index, r.index) for c in cand for r in ref if c.surface == r.surface}
    elif stage in (MatchStage.STEM, MatchStage.SYNONYM):
        fw = resources.is_function_word
        cs = [c for c in cand if not fw(c.surface)]
        rs = [r for r in ref if not fw(r.surface)]
        if stage is MatchStage.STEM:
            pairs = {(c.index, r.index) for c in cs for r in rs
                     if stem_of(c, resources) == stem_of(r, resources)}
        else:
            pairs = {(c.index, r.index) for c in cs for r in rs
                     if resources.synonyms(c.surface, r.surface)}
    elif stage is MatchStage.LWG:
        pairs = lwg_match(lwg_split(cand, resources), lwg_split(ref, resources), resources)
    else:
        pairs = pos_match(cand, ref, resources)

    if cand_free is not None:
        cf = set(cand_free)
        pairs = {p for p in pairs if p[0] in cf}
    if ref_free is not None:
        rf = set(ref_free)
        pairs = {p for p in pairs if p[1] in rf}
    return pairs
