import itertools

import pytest
from hypothesis import given, strategies as st

from schubpat.errors import LetterNotInWordError, NotASubwordError
from schubpat.permwords import (
    Permutation,
    Word,
    all_permutations,
    all_subwords,
    avoids,
    flatten,
    is_subword,
    pattern_count,
    subwords_between,
    substitution_indices,
)

perms = lambda n: st.permutations(list(range(1, n + 1))).map(lambda v: Permutation(tuple(v)))


def test_inverse_examples():
    assert Permutation.from_string("15243").inverse() == Permutation.from_string("13542")
    assert Permutation.identity(4).inverse() == Permutation.identity(4)
    assert Permutation.from_string("2143").inverse() == Permutation.from_string("2143")


@given(st.integers(1, 6).flatmap(perms))
def test_inverse_involutive(w):
    assert w.inverse().inverse() == w
    for i in range(1, w.n + 1):
        assert w.inverse()(w(i)) == i


def test_is_subword_examples():
    assert is_subword(Word.of(7, 9, 2), Word.of(3, 7, 9, 5, 2))
    assert is_subword(Word(), Word.of(3, 7, 9, 5, 2))
    assert not is_subword(Word.of(4, 3), Word.of(1, 3, 4, 2))
    assert is_subword(Word.of(4, 2), Word.of(1, 3, 4, 2))


def test_flatten_examples():
    assert flatten(Word.of(3, 7, 9, 5, 2)) == Permutation.from_string("24531")
    assert flatten(Word()) == Permutation(())
    # independent oracle: rank replacement by sorting
    assert flatten(Word.of(3, 2, 6, 5)) == Permutation.from_string("2143")


@given(st.integers(1, 6).flatmap(perms))
def test_flatten_fixes_permutation_words(w):
    assert flatten(w.word()) == w


def test_pattern_count_examples():
    # brute-force oracle over all C(4,3) subsequences of 1432 gives three
    # occurrences of 132 (via 143, 142 and 132)
    assert pattern_count(Permutation.from_string("132"), Permutation.from_string("1432")) == 3
    w = Permutation.from_string("3142")
    assert pattern_count(w, w) == 1
    assert pattern_count(Permutation.from_string("12"), Permutation.from_string("321")) == 0


def test_avoids_examples():
    assert avoids(Permutation.from_string("2143"))
    assert not avoids(Permutation.from_string("1432"))
    assert not avoids(Permutation.from_string("15243"))


def test_subwords_between_examples():
    w = Permutation.from_string("1342")
    got = {str(v) for v in subwords_between(Word.of(4, 2), w)}
    assert got == {"1342", "142", "342", "42"}
    w = Permutation.from_string("2143")
    got = {str(v) for v in subwords_between(Word.of(4, 3), w)}
    assert got == {"2143", "143", "243", "43"}
    got = {str(v) for v in subwords_between(Word(), Permutation.from_string("21"))}
    assert got == {"21", "2", "1", "()"}


def test_subwords_between_rejects_non_subword():
    with pytest.raises(NotASubwordError):
        subwords_between(Word.of(4, 3), Permutation.from_string("1342"))


@pytest.mark.parametrize("n", range(1, 6))
def test_subword_interval_counts(n):
    for w in all_permutations(n):
        for u in all_subwords(w):
            between = subwords_between(u, w)
            assert len(between) == 2 ** (len(w) - len(u))
            assert len(set(between)) == len(between)
            for v in between:
                assert is_subword(u, v) and is_subword(v, w.word())


def test_substitution_indices_examples():
    w = Permutation.from_string("134265")
    assert substitution_indices(w, Word.of(3, 2, 6, 5)) == (2, 4, 5, 6)
    assert substitution_indices(Permutation.from_string("2143"), Word.of(1, 4, 3)) == (2, 3, 4)
    w = Permutation.from_string("4213")
    assert substitution_indices(w, w.word()) == (1, 2, 3, 4)


def test_substitution_indices_rejects_bad_letters():
    with pytest.raises(LetterNotInWordError):
        substitution_indices(Permutation.from_string("321"), Word.of(5))


@pytest.mark.parametrize("n", range(1, 8))
def test_substitution_indices_increasing_exhaustive(n):
    for w in all_permutations(n):
        for v in all_subwords(w):
            out = substitution_indices(w, v)
            assert list(out) == sorted(out)


@pytest.mark.parametrize("n", range(1, 7))
def test_pattern_count_matches_subword_flattening(n):
    from collections import Counter

    for w in all_permutations(n):
        tally = Counter(flatten(v) for v in all_subwords(w) if len(v))
        for u, expected in tally.items():
            assert pattern_count(u, w) == expected
        absent = Permutation.from_string("1432")
        if absent not in tally and n >= 4:
            assert pattern_count(absent, w) == 0


def test_word_string_round_trip():
    for s in ["()", "42", "2,14,3", "15243"]:
        assert str(Word.from_string(s)) == s


def test_word_rejects_duplicates():
    with pytest.raises(ValueError):
        Word.of(3, 3)
