import itertools
import json

import pytest
from reference_data import JACKSON_DEGREE4, NON_JACKSON_DEGREE4, NOT_ULW_DEGREE4

from unilyndon.core import CapacityError, DomainError, Word
from unilyndon.census import census_from_words, classify_ulws, enumerate_ulws
from unilyndon.jackson import build_jackson_graph, enumerate_eulerian_cycles, word_from_cycle
from unilyndon.lexcode import lexcode_census
from unilyndon.ulw import canonicalize, check_stretch_closure, is_jackson_type, is_ulw


@pytest.mark.parametrize("n, labeled, iso", [(1, 1, 1), (2, 1, 1), (3, 3, 1)])
def test_small_degrees(n, labeled, iso):
    c = enumerate_ulws(n)
    assert (c.labeled_count, c.iso_class_count) == (labeled, iso)
    assert c.jackson_count + c.non_jackson_count == c.iso_class_count


def test_degree1_convention():
    c = enumerate_ulws(1)
    assert [str(w) for w in c.words] == ["1"]
    assert c.jackson_by_convention and c.jackson_count == 1 and c.non_jackson_count == 0


def test_degree3_against_unreduced_search():
    brute = {
        canonicalize(Word(t, 3)).canonical
        for t in itertools.product((1, 2, 3), repeat=6)
        if is_ulw(Word(t, 3))
    }
    assert set(enumerate_ulws(3).words) == brute


def test_degree3_three_routes_agree(census3):
    jackson = {
        canonicalize(word_from_cycle(c, 3)).canonical
        for c in enumerate_eulerian_cycles(build_jackson_graph(3))
    }
    lex = set(lexcode_census(3).words)
    assert set(census3.words) == jackson == lex


class TestDegree4:
    def test_class_split(self, census4):
        assert census4.iso_class_count == 41
        assert (census4.jackson_count, census4.non_jackson_count) == (20, 21)

    def test_jackson_words_are_the_eulerian_words(self, census4):
        eulerian = {
            canonicalize(word_from_cycle(c, 4)).canonical
            for c in enumerate_eulerian_cycles(build_jackson_graph(4))
        }
        jackson = {w for w, k in zip(census4.words, census4.iso_class) if census4.class_is_jackson[k]}
        assert eulerian == jackson
        assert len(jackson) == 384

    def test_orbit_sizes_account_for_labeled_count(self, census4):
        # independent tally: size of each class under renaming and rotation
        sizes = []
        for rep in census4.classes:
            orbit = {
                canonicalize(rep.rename(p)).canonical
                for p in itertools.permutations(range(1, 5))
            }
            sizes.append(len(orbit))
        assert sum(sizes) == census4.labeled_count
        assert set(sizes) <= {12, 24}

    def test_every_word_canonical_and_sorted(self, census4):
        letters = [w.letters for w in census4.words]
        assert letters == sorted(letters) and len(set(letters)) == len(letters)
        assert all(canonicalize(w).canonical == w for w in census4.words)

    def test_every_word_passes_all_modes_and_closure(self, census4):
        for w in census4.words:
            assert is_ulw(w, "order_defining") and check_stretch_closure(w)

    def test_reversal_closure(self, census4):
        canon = set(census4.words)
        assert {canonicalize(Word(w.letters[::-1], 4)).canonical for w in canon} == canon

    def test_jackson_constant_on_classes(self, census4):
        for rep, flag in zip(census4.classes, census4.class_is_jackson):
            for p in itertools.permutations(range(1, 5)):
                assert is_jackson_type(rep.rename(p)) == flag

    def test_workers_do_not_change_result(self, census4):
        assert enumerate_ulws(4, workers=3) == census4

    def test_progress_messages(self):
        seen = []
        enumerate_ulws(3, progress=seen.append)
        assert len(seen) == 2 and "verified" in seen[-1]


def test_guard():
    for n in (0, 5):
        with pytest.raises(CapacityError):
            enumerate_ulws(n)


class TestClassify:
    def test_from_census(self, census4):
        split = classify_ulws(census4)
        assert len(split.jackson) == 20 and len(split.non_jackson) == 21
        assert not split.by_convention

    def test_from_word_list(self):
        split = classify_ulws(list(JACKSON_DEGREE4[:3]) + list(NON_JACKSON_DEGREE4[:2]))
        assert len(split.jackson) == 3 and len(split.non_jackson) == 2

    def test_rejects_non_ulw_by_name(self):
        with pytest.raises(DomainError, match=NOT_ULW_DEGREE4):
            classify_ulws([JACKSON_DEGREE4[0], NOT_ULW_DEGREE4])

    def test_empty_and_mixed(self):
        with pytest.raises(DomainError):
            census_from_words([])
        with pytest.raises(DomainError):
            census_from_words(["212313", JACKSON_DEGREE4[0]])


def test_jsonl(census3):
    lines = census3.to_jsonl().splitlines()
    records = [json.loads(x) for x in lines]
    assert [r["word"] for r in records[:-1]] == [str(w) for w in census3.words]
    assert records[-1]["summary"] == {
        "degree": 3, "labeled": 3, "iso": 1, "jackson": 1, "non_jackson": 0,
        "jackson_by_convention": False,
    }
    assert census3.summary_line() == "labeled=3 iso=1 jackson=1 non_jackson=0"
