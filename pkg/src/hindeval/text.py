"""Normalization, tokenization and corpus ingestion.

Every string that reaches a metric goes through :func:`normalize` first, so
exact-match comparisons are stable across composed and decomposed Devanagari.
"""

from __future__ import annotations

import os
import re
import unicodedata
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

TOKENIZER_VERSION = "1"

DANDA = "।"
DOUBLE_DANDA = "॥"
PUNCTUATION = frozenset(DANDA + DOUBLE_DANDA + '.,!?;:"()')

_WS = re.compile(r"\s+")
_PUNCT = re.compile("([" + re.escape("".join(sorted(PUNCTUATION))) + "])")


class IngestionError(ValueError):
    """Raised when input text or files cannot be turned into a corpus."""


@dataclass(frozen=True)
class Token:
    surface: str
    index: int


@dataclass(frozen=True)
class Segment:
    tokens: tuple[Token, ...]
    raw: str = ""

    def __len__(self):
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)

    def __getitem__(self, i):
        return self.tokens[i]

    @property
    def words(self) -> tuple[str, ...]:
        return tuple(t.surface for t in self.tokens)

    @classmethod
    def from_words(cls, words: Iterable[str], raw: str | None = None) -> "Segment":
        words = list(words)
        for w in words:
            if not w or _WS.search(w):
                raise ValueError(f"invalid token {w!r}")
        tokens = tuple(Token(w, i) for i, w in enumerate(words))
        return cls(tokens, " ".join(words) if raw is None else raw)


@dataclass(frozen=True)
class EvalUnit:
    candidate: Segment
    references: tuple[Segment, ...]
    line_no: int = 1

    def __post_init__(self):
        if not self.references:
            raise ValueError("an evaluation unit needs at least one reference")


@dataclass(frozen=True)
class Corpus:
    units: tuple[EvalUnit, ...]
    n_refs: int

    def __post_init__(self):
        for u in self.units:
            if len(u.references) != self.n_refs:
                raise ValueError(
                    f"unit on line {u.line_no} has {len(u.references)} references, expected {self.n_refs}"
                )

    def __len__(self):
        return len(self.units)

    def __iter__(self):
        return iter(self.units)

    @classmethod
    def from_texts(cls, candidates: Sequence[str], *references: Sequence[str]) -> "Corpus":
        """Build a corpus from in-memory lines (one list per reference set)."""
        if not references:
            raise ValueError("at least one reference set is required")
        for r in references:
            if len(r) != len(candidates):
                raise IngestionError(
                    f"line-count mismatch: {len(candidates)} candidates vs {len(r)} references"
                )
        units = []
        for i, cand in enumerate(candidates):
            refs = tuple(segment(r[i]) for r in references)
            units.append(EvalUnit(segment(cand), refs, i + 1))
        return cls(tuple(units), len(references))


def normalize(text: Union[str, bytes]) -> str:
    """NFC-normalize, strip, and collapse internal whitespace runs."""
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("utf-8")
        except UnicodeDecodeError as e:
            raise IngestionError(f"invalid UTF-8 at byte offset {e.start}") from e
    text = unicodedata.normalize("NFC", text)
    return _WS.sub(" ", text).strip()


def tokenize(text: str) -> Segment:
    """Split normalized text on whitespace, detaching dandas and ASCII punctuation.

    Two adjacent single dandas are read as one double danda.
    """
    raw = text
    text = text.replace(DANDA + DANDA, DOUBLE_DANDA)
    words = _PUNCT.sub(r" \1 ", text).split()
    return Segment(tuple(Token(w, i) for i, w in enumerate(words)), raw)


def segment(line: Union[str, bytes]) -> Segment:
    """Normalize and tokenize one input line, keeping the original text as ``raw``."""
    seg = tokenize(normalize(line))
    raw = line if isinstance(line, str) else seg.raw
    return Segment(seg.tokens, raw)


def detokenize(segment: Segment) -> str:
    return " ".join(segment.words)


def _read_lines(path) -> list[str]:
    with open(path, "rb") as f:
        data = f.read()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        line = data.count(b"\n", 0, e.start) + 1
        raise IngestionError(f"{path}: invalid UTF-8 at byte offset {e.start} (line {line})") from e
    if text.startswith("\ufeff"):
        text = text[1:]
    if not text:
        return []
    lines = text.split("\n")
    if lines[-1] == "":
        lines.pop()
    return [ln[:-1] if ln.endswith("\r") else ln for ln in lines]


def load_corpus(candidate_path, reference_paths: Sequence) -> Corpus:
    """Read a candidate file and N line-parallel reference files."""
    if isinstance(reference_paths, (str, os.PathLike)):
        reference_paths = [reference_paths]
    if not reference_paths:
        raise IngestionError("at least one reference file is required")
    try:
        cand_lines = _read_lines(candidate_path)
        ref_lines = [_read_lines(p) for p in reference_paths]
    except OSError as e:
        raise IngestionError(str(e)) from e
    if not cand_lines:
        raise IngestionError(f"{candidate_path}: candidate file is empty")
    counts = [len(cand_lines)] + [len(r) for r in ref_lines]
    if len(set(counts)) > 1:
        names = [candidate_path, *reference_paths]
        detail = ", ".join(f"{p} ({n} lines)" for p, n in zip(names, counts))
        raise IngestionError(f"line-count mismatch: {detail}")
    return Corpus.from_texts(cand_lines, *ref_lines)
