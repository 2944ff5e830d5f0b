import unicodedata

import pytest
from hypothesis import given, strategies as st

from hindeval import (Corpus, IngestionError, Segment, detokenize, load_corpus, normalize,
                      segment, tokenize)

from conftest import C1


def test_normalize_collapses_whitespace():
    assert normalize("  सेब  खाया ") == "सेब खाया"
    assert normalize("a\t\n b") == "a b"
    assert normalize("") == ""


def test_normalize_nfc_devanagari_nukta():
    decomposed = "\u0915\u093c"  # ka + nukta
    precomposed = "\u0958"  # qa, a composition exclusion
    assert normalize(decomposed) == normalize(precomposed)
    assert normalize(precomposed) == unicodedata.normalize("NFC", decomposed)
    assert normalize("\u0928\u093c") == "\u0929"  # nna composes under NFC


def test_normalize_bytes():
    assert normalize("सेब".encode()) == "सेब"
    with pytest.raises(IngestionError, match="byte offset 2"):
        normalize(b"ab\xff")


def test_tokenize_example_sentence():
    seg = tokenize(normalize(C1))
    assert len(seg) == 10
    assert seg.words[-1] == "।"
    assert [t.index for t in seg] == list(range(10))


@pytest.mark.parametrize("text,expected", [
    ("a b", ["a", "b"]),
    ("खाया।।", ["खाया", "॥"]),
    ("खाया॥", ["खाया", "॥"]),
    ('(x), "y"!', ["(", "x", ")", ",", '"', "y", '"', "!"]),
    ("", []),
])
def test_tokenize_cases(text, expected):
    assert list(tokenize(text).words) == expected


def test_segment_keeps_raw():
    s = segment("  सेब  खाया। ")
    assert s.raw == "  सेब  खाया। "
    assert s.words == ("सेब", "खाया", "।")


text_st = st.text(alphabet=st.sampled_from(list("अकखग सेब।॥.,!? \t़कab")), max_size=40)


@given(text_st)
def test_tokenize_deterministic_and_roundtrip(x):
    s1 = tokenize(normalize(x))
    assert s1 == tokenize(normalize(x))
    assert all(t.surface and not any(c.isspace() for c in t.surface) for t in s1)
    again = tokenize(normalize(detokenize(s1)))
    assert again.words == s1.words


def test_load_corpus_pairs_lines(write_lines):
    cand = write_lines("c.txt", ["a b", "c d", "e"])
    r1 = write_lines("r1.txt", ["a b", "c", "e f"])
    r2 = write_lines("r2.txt", ["a", "c d", "e"], newline="\r\n")
    corpus = load_corpus(cand, [r1, r2])
    assert len(corpus) == 3 and corpus.n_refs == 2
    assert [u.line_no for u in corpus] == [1, 2, 3]
    assert corpus.units[1].candidate.words == ("c", "d")
    assert corpus.units[1].references[1].words == ("c", "d")


def test_load_corpus_mismatch_names_files(write_lines):
    cand = write_lines("c.txt", ["a", "b", "c"])
    ref = write_lines("r.txt", ["a", "b"])
    with pytest.raises(IngestionError) as e:
        load_corpus(cand, [ref])
    assert "c.txt (3 lines)" in str(e.value) and "r.txt (2 lines)" in str(e.value)


def test_load_corpus_identity_single_line(write_lines):
    corpus = load_corpus(write_lines("c.txt", ["सेब"]), [write_lines("r.txt", ["सेब"])])
    u = corpus.units[0]
    assert u.candidate.words == u.references[0].words == ("सेब",)


def test_load_corpus_empty_candidate(write_lines, tmp_path):
    empty = tmp_path / "empty.txt"
    empty.write_bytes(b"")
    with pytest.raises(IngestionError, match="empty"):
        load_corpus(str(empty), [str(empty)])


def test_load_corpus_keeps_blank_lines(write_lines):
    corpus = load_corpus(write_lines("c.txt", ["a", "", "b"]), [write_lines("r.txt", ["a", "x", "b"])])
    assert len(corpus) == 3
    assert len(corpus.units[1].candidate) == 0


def test_load_corpus_bad_utf8(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_bytes(b"ok\nab\xffcd\n")
    with pytest.raises(IngestionError, match="byte offset 5"):
        load_corpus(str(p), [str(p)])


def test_units_need_references():
    with pytest.raises(ValueError):
        Corpus.from_texts(["a"])
    with pytest.raises(ValueError):
        Segment.from_words(["a b"])
