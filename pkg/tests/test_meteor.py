import pytest
from hypothesis import given, settings, strategies as st

from hindeval import (MatchStage, MeteorConfig, ResourceSet, Segment, align, count_chunks,
                      crossing_count, match_stage, meteor_corpus, meteor_unit, select_alignment)
from hindeval.meteor import compose

from conftest import unit
from oracles import best_matching, chunks as brute_chunks


def seg(words):
    return Segment.from_words(words)


def test_exact_stage_pairs():
    assert match_stage(seg(["सेब", "खाया"]), seg(["खाया", "सेब"]), MatchStage.EXACT) == {(0, 1), (1, 0)}


def test_stem_stage(toy):
    res = ResourceSet.build(stems={"लड़के": "लड़क", "लड़का": "लड़क"})
    assert match_stage(seg(["लड़के"]), seg(["लड़का"]), MatchStage.STEM, res) == {(0, 0)}


def test_synonym_stage():
    res = ResourceSet.build(synsets=[["घर", "मकान"]])
    assert match_stage(seg(["घर"]), seg(["मकान"]), MatchStage.SYNONYM, res) == {(0, 0)}


def test_missing_tables_yield_nothing(empty):
    for stage in (MatchStage.STEM, MatchStage.SYNONYM, MatchStage.LWG, MatchStage.POS):
        assert match_stage(seg(["a"]), seg(["a"]), stage, empty) == set()


def test_free_position_filter():
    pairs = match_stage(seg(list("aba")), seg(list("aab")), MatchStage.EXACT, cand_free=[2], ref_free=[0, 2])
    assert pairs == {(2, 0)}


def test_select_prefers_fewer_crossings():
    cand, ref = seg(list("aba")), seg(list("aab"))
    al = align(cand, ref)
    assert al.links == ((0, 0), (1, 2), (2, 1))
    assert al.crossings == 1


def test_select_identity_and_empty():
    al = align(seg(list("abc")), seg(list("abc")))
    assert al.links == ((0, 0), (1, 1), (2, 2)) and al.crossings == 0
    assert align(seg(["a"]), seg(["b"])).links == ()


def test_later_stage_counts_crossings_against_earlier_links():
    # exact links b-b; the stem stage then has two ways to link x1/x2 to y1/y2
    res = ResourceSet.build(stems={"x1": "x", "x2": "x", "y1": "x", "y2": "x"})
    cand = seg(["x1", "b", "x2"])
    ref = seg(["y1", "b", "y2"])
    al = align(cand, ref, resources=res)
    assert al.links == ((0, 0), (1, 1), (2, 2))
    assert [s for _, _, s in al.pairs] == [MatchStage.STEM, MatchStage.EXACT, MatchStage.STEM]


def test_select_alignment_respects_stage_order():
    stage_pairs = [(MatchStage.EXACT, {(0, 1)}), (MatchStage.STEM, {(0, 0), (1, 1)})]
    al = select_alignment(stage_pairs, 2, 2)
    assert al.pairs == ((0, 1, MatchStage.EXACT),)


@pytest.mark.parametrize("links,expected", [
    ([(0, 0), (1, 1), (2, 2)], 1),
    ([(0, 0), (1, 2), (2, 3)], 2),
    ([(0, 2), (1, 1), (2, 0)], 3),
    ([], 0),
])
def test_count_chunks(links, expected):
    assert count_chunks(links) == expected


def test_meteor_identity_ten_tokens():
    s = meteor_unit(unit(list("abcdefghij"), list("abcdefghij")))
    assert (s.precision, s.recall, s.fmean, s.chunks) == (1.0, 1.0, 1.0, 1)
    assert s.penalty == pytest.approx(0.0005)
    assert s.score == pytest.approx(0.9995)


def test_meteor_disjoint():
    s = meteor_unit(unit(list("abc"), list("xyz")))
    assert s.matches == 0 and s.score == 0 and s.chunks == 0


def test_meteor_hand_fixture_via_pipeline():
    # 8-token candidate, 10-token reference, 6 matches in 3 chunks
    s = meteor_unit(unit("a b X c d Y e f", "a b P Q c d R S e f"))
    assert (s.matches, s.cand_len, s.ref_len, s.chunks) == (6, 8, 10, 3)
    assert s.precision == 0.75 and s.recall == 0.6
    assert s.fmean == pytest.approx(4.5 / 7.35)
    assert s.penalty == pytest.approx(0.0625)
    assert s.score == pytest.approx(0.574, abs=1e-3)


def test_harmonic_mode():
    s = compose(6, 8, 10, 3, MeteorConfig(fmean="harmonic"))
    assert s.fmean == pytest.approx(2 * 0.75 * 0.6 / 1.35)


def test_meteor_corpus_sums_statistics():
    u1 = unit("a b X c d Y e f", "a b P Q c d R S e f")
    u2 = unit("w x y z", "w x y z")
    s = meteor_corpus([u1, u2])
    p, r = 10 / 12, 10 / 14
    fmean = 10 * p * r / (r + 9 * p)
    assert (s.matches, s.cand_len, s.ref_len, s.chunks) == (10, 12, 14, 4)
    assert s.score == pytest.approx(fmean * (1 - 0.5 * 0.4 ** 3))
    assert meteor_corpus([unit("a", "b"), unit("c", "d")]).score == 0.0


def test_meteor_identity_corpus_matches_unit():
    u = unit(list("abcdefghij"), list("abcdefghij"))
    assert meteor_corpus([u, u, u]).score == pytest.approx(1 - 0.5 * 0.1 ** 3)


def test_best_reference_by_score():
    u = unit("a b c d", "d c b a", "a b c d")
    s = meteor_unit(u)
    assert s.alignment.ref_choice == 1 and s.chunks == 1


def test_degenerate_input_flag():
    s = meteor_unit(unit([], "a"))
    assert s.score == 0 and "degenerate-input" in s.flags


def test_config_validation():
    with pytest.raises(ValueError):
        MeteorConfig(fmean="geometric")
    with pytest.raises(ValueError):
        MeteorConfig(gamma=2)
    assert MeteorConfig(stages=(2, 1, 2)).stages == (MatchStage.EXACT, MatchStage.STEM)


sym = st.sampled_from("abcde")
short = st.lists(sym, max_size=8)


@given(short, short)
@settings(max_examples=300, deadline=None)  # the brute-force oracle is slow on repetitive inputs
def test_alignment_matches_exhaustive_search(c, r):
    al = align(seg(c), seg(r))
    size, cross, links = best_matching(c, r)
    assert (len(al), al.crossings) == (size, cross)
    assert list(al.links) == links
    assert count_chunks(al) == brute_chunks(links)


@given(short, short)
def test_alignment_is_injective_and_bounded(c, r):
    s = meteor_unit(unit(c, r)) if c or r else None
    if s is None:
        return
    links = s.alignment.links
    assert len({i for i, _ in links}) == len(links) == len({j for _, j in links})
    assert list(links) == sorted(links)
    assert 0 <= s.score <= 1 and 0 <= s.penalty <= 0.5
    if s.matches:
        assert 1 <= s.chunks <= s.matches
    else:
        assert s.chunks == 0 and s.score == 0


@given(st.lists(st.sampled_from(["p", "q", "r", "s"]), max_size=7),
       st.lists(st.sampled_from(["p", "q", "r", "s"]), max_size=7))
def test_enabling_stage_never_decreases_matches(c, r):
    res = ResourceSet.build(stems={"p": "x", "q": "x"}, synsets=[["r", "s"]])
    m = [len(align(seg(c), seg(r), stages[:k], res)) for stages in [list(MatchStage)] for k in (1, 2, 3)]
    assert m[0] <= m[1] <= m[2]


def test_crossing_count():
    assert crossing_count([(0, 1), (1, 0)]) == 1
    assert crossing_count([(0, 0), (1, 1)]) == 0
