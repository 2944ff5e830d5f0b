"""Lexical resource tables backing the stem, synonym, LWG and POS matchers.

File formats (UTF-8, ``#`` starts a comment line, blank lines ignored):

* ``stems.tsv``          ``surface<TAB>stem``
* ``synsets.txt``        one synset per line, members whitespace-separated
* ``pos.tsv``            ``surface<TAB>tag``
* ``function_words.txt`` one word per line
"""

from __future__ import annotations

import hashlib
import os
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Mapping, Optional

from .text import normalize

TABLES = ("stems", "synsets", "pos", "function_words")
FILENAMES = {
    "stems": "stems.tsv",
    "synsets": "synsets.txt",
    "pos": "pos.tsv",
    "function_words": "function_words.txt",
}
ENV_VAR = "HINDEVAL_RESOURCES"


class ResourceError(ValueError):
    pass


@dataclass(frozen=True)
class ResourceSet:
    stems: Mapping[str, str] = field(default_factory=lambda: MappingProxyType({}))
    synsets: tuple[frozenset, ...] = ()
    pos: Mapping[str, str] = field(default_factory=lambda: MappingProxyType({}))
    function_words: frozenset = frozenset()
    # table name -> sha256 of the file it was read from; absent tables are missing
    sources: Mapping[str, str] = field(default_factory=lambda: MappingProxyType({}))

    def __post_init__(self):
        index: dict[str, set[int]] = {}
        for k, syn in enumerate(self.synsets):
            for w in syn:
                index.setdefault(w, set()).add(k)
        object.__setattr__(self, "_syn_index", {w: frozenset(v) for w, v in index.items()})

    @classmethod
    def build(cls, stems=None, synsets=None, pos=None, function_words=None) -> "ResourceSet":
        """In-memory constructor; keys are NFC-normalized. Tables left as None are missing."""
        sources = {}
        st = {}
        if stems is not None:
            st = {normalize(k): normalize(v) for k, v in dict(stems).items()}
            sources["stems"] = "inline"
        syn: list[frozenset] = []
        if synsets is not None:
            syn = [frozenset(normalize(w) for w in s) for s in synsets]
            sources["synsets"] = "inline"
        ps = {}
        if pos is not None:
            ps = {normalize(k): v for k, v in dict(pos).items()}
            sources["pos"] = "inline"
        fw = frozenset()
        if function_words is not None:
            fw = frozenset(normalize(w) for w in function_words)
            sources["function_words"] = "inline"
        return cls(MappingProxyType(st), tuple(syn), MappingProxyType(ps), fw, MappingProxyType(sources))

    def missing(self, table: str) -> bool:
        return table not in self.sources

    @property
    def missing_tables(self) -> tuple[str, ...]:
        return tuple(t for t in TABLES if self.missing(t))

    def is_function_word(self, word: str) -> bool:
        return word in self.function_words

    def synonyms(self, a: str, b: str) -> bool:
        ia = self._syn_index.get(a)
        return bool(ia) and not ia.isdisjoint(self._syn_index.get(b, ()))

    def describe(self) -> dict:
        return {t: self.sources.get(t) for t in TABLES}


def stem_of(token, resources: ResourceSet) -> str:
    word = getattr(token, "surface", token)
    return resources.stems.get(word, word)


def _content_lines(path: Path):
    with open(path, "rb") as f:
        data = f.read()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        raise ResourceError(f"{path}: invalid UTF-8 at byte offset {e.start}") from e
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _read_pairs(path: Path, what: str) -> dict[str, str]:
    out: dict[str, str] = {}
    for lineno, line in _content_lines(path):
        parts = line.split("\t")
        if len(parts) != 2 or not parts[0].strip() or not parts[1].strip():
            raise ResourceError(f"{path}:{lineno}: expected 'surface<TAB>{what}', got {line!r}")
        key, val = normalize(parts[0]), normalize(parts[1])
        if key in out and out[key] != val:
            raise ResourceError(
                f"{path}:{lineno}: conflicting {what} for {key!r}: {out[key]!r} vs {val!r}"
            )
        out[key] = val
    return out


def _read_synsets(path: Path) -> list[frozenset]:
    out = []
    for lineno, line in _content_lines(path):
        words = [normalize(w) for w in line.split()]
        if len(words) < 2:
            raise ResourceError(f"{path}:{lineno}: a synset needs at least two members")
        if len(set(words)) != len(words):
            raise ResourceError(f"{path}:{lineno}: duplicate member in synset")
        out.append(frozenset(words))
    return out


def _read_words(path: Path) -> frozenset:
    words = set()
    for lineno, line in _content_lines(path):
        if len(line.split()) != 1:
            raise ResourceError(f"{path}:{lineno}: expected one word per line, got {line!r}")
        words.add(normalize(line))
    return frozenset(words)


def _sha256(path: Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def load_resources(stem_path=None, synset_path=None, pos_path=None, function_word_path=None) -> ResourceSet:
    sources = {}
    stems, synsets, pos, fw = {}, [], {}, frozenset()
    if stem_path is not None:
        stems = _read_pairs(Path(stem_path), "stem")
        sources["stems"] = _sha256(stem_path)
    if synset_path is not None:
        synsets = _read_synsets(Path(synset_path))
        sources["synsets"] = _sha256(synset_path)
    if pos_path is not None:
        pos = _read_pairs(Path(pos_path), "tag")
        sources["pos"] = _sha256(pos_path)
    if function_word_path is not None:
        fw = _read_words(Path(function_word_path))
        sources["function_words"] = _sha256(function_word_path)
    return ResourceSet(
        MappingProxyType(stems), tuple(synsets), MappingProxyType(pos), fw, MappingProxyType(sources)
    )


def load_resource_dir(directory: Optional[os.PathLike] = None) -> ResourceSet:
    """Load whichever of the four standard files exist in ``directory``.

    Falls back to ``$HINDEVAL_RESOURCES``; with neither, returns an empty set.
    """
    if directory is None:
        directory = os.environ.get(ENV_VAR) or None
    if directory is None:
        return ResourceSet()
    directory = Path(directory)
    if not directory.is_dir():
        raise ResourceError(f"resource directory not found: {directory}")
    paths = {}
    for table, name in FILENAMES.items():
        p = directory / name
        paths[table] = p if p.is_file() else None
    return load_resources(paths["stems"], paths["synsets"], paths["pos"], paths["function_words"])
