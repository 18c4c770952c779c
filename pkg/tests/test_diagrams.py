import itertools

import pytest
from hypothesis import given, strategies as st

from schubpat.diagrams import (
    Diagram,
    augment,
    column_dominates,
    count_dominated,
    dominates,
    enumerate_dominated,
    has_northwest_property,
    hat_v,
    restrict_keep,
    restrict_remove,
    rothe,
    row_monomial,
)
from schubpat.errors import AugmentationOverlapError
from schubpat.permwords import Permutation, Word, all_permutations
from schubpat.polyx import Monomial

perms = lambda n: st.permutations(list(range(1, n + 1))).map(lambda v: Permutation(tuple(v)))

diagrams = st.integers(2, 4).flatmap(
    lambda n: st.frozensets(
        st.tuples(st.integers(1, n), st.integers(1, n)), max_size=n * n
    ).map(lambda b: Diagram(n, b))
)


def test_rothe_examples():
    assert rothe(Permutation.from_string("1342")) == Diagram.of(4, [(2, 2), (3, 2)])
    assert rothe(Permutation.from_string("12453")) == Diagram.of(5, [(3, 3), (4, 3)])
    assert rothe(Permutation.from_string("2143")) == Diagram.of(4, [(1, 1), (3, 3)])
    assert rothe(Permutation.identity(5)) == Diagram.of(5, [])


@given(st.integers(1, 6).flatmap(perms))
def test_rothe_size_is_inversion_count(w):
    D = rothe(w)
    assert len(D) == w.inversions()
    # independent definition: boxes are (i, w(j)) for inversions i < j
    boxes = {
        (i, w(j))
        for i, j in itertools.combinations(range(1, w.n + 1), 2)
        if w(i) > w(j)
    }
    assert D.boxes == frozenset(boxes)


@pytest.mark.parametrize("n", range(1, 6))
def test_rothe_has_northwest_property(n):
    for w in all_permutations(n):
        assert has_northwest_property(rothe(w))


def test_northwest_property_counterexample():
    assert not has_northwest_property(Diagram.of(3, [(1, 2), (2, 1)]))
    assert has_northwest_property(Diagram.of(3, [(1, 1), (1, 2), (2, 1)]))


def test_column_dominates_examples():
    assert column_dominates((1, 3), (2, 4))
    assert column_dominates((2, 4), (2, 4))
    assert not column_dominates((2, 4), (1, 3))
    assert not column_dominates((1,), (1, 2))
    assert column_dominates((), ())


def test_dominates_requires_matching_size():
    with pytest.raises(ValueError):
        dominates(Diagram.of(3, []), Diagram.of(4, []))


@given(diagrams)
def test_dominance_reflexive(D):
    assert dominates(D, D)


def test_dominance_antisymmetric_and_transitive():
    D = rothe(Permutation.from_string("35142"))
    pool = list(enumerate_dominated(D))
    for A, B in itertools.combinations(pool, 2):
        if dominates(A, B) and dominates(B, A):
            assert A == B
    import random

    rng = random.Random(7)
    for _ in range(500):
        A, B, C = (rng.choice(pool) for _ in range(3))
        if dominates(A, B) and dominates(B, C):
            assert dominates(A, C)


@pytest.mark.parametrize("n", range(1, 6))
def test_enumerate_and_count_agree(n):
    for w in all_permutations(n):
        D = rothe(w)
        members = list(enumerate_dominated(D))
        assert len(members) == count_dominated(D)
        assert len(set(members)) == len(members)
        assert all(dominates(C, D) for C in members)
        assert D in members


def test_enumerate_dominated_example():
    # single column (3, 4): chains r1 < r2 with r1 <= 3, r2 <= 4
    D = Diagram.of(5, [(3, 3), (4, 3)])
    got = {C.boxes for C in enumerate_dominated(D)}
    expected = {
        frozenset({(a, 3), (b, 3)})
        for a, b in [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    }
    assert got == expected
    assert count_dominated(D) == 6


def test_dominated_complete_against_bruteforce():
    D = rothe(Permutation.from_string("1432"))
    all_sub = set()
    grid = [(i, j) for i in range(1, 5) for j in range(1, 5)]
    for r in range(len(D) + 1):
        for boxes in itertools.combinations(grid, r):
            C = Diagram.of(4, boxes)
            cols_match = all(
                len(C.column(j)) == len(D.column(j)) for j in range(1, 5)
            )
            if cols_match and dominates(C, D):
                all_sub.add(C)
    assert all_sub == set(enumerate_dominated(D))


def test_restrict_keep_and_remove():
    D = rothe(Permutation.from_string("2143"))
    assert restrict_keep(D, [1], [1]) == Diagram.of(4, [(1, 1)])
    assert restrict_keep(D, [1, 3], [3]) == Diagram.of(4, [(3, 3)])
    assert restrict_remove(D, 1, 1) == Diagram.of(4, [(3, 3)])
    assert restrict_remove(D, 3, 1) == Diagram.of(4, [])


def test_hat_v_examples():
    w = Permutation.from_string("2143")
    D = rothe(w)
    assert hat_v(D, w, Word.of(4, 3)) == Diagram.of(4, [(3, 3)])
    assert hat_v(D, w, w.word()) == D
    assert hat_v(D, w, Word()) == Diagram.of(4, [])


def test_augment_examples():
    D = rothe(Permutation.from_string("2143"))
    Chat = Diagram.of(4, [(3, 3)])
    assert augment(Chat, D, 1, 1) == D
    empty = Diagram.of(4, [])
    assert augment(empty, D, 3, 4) == Diagram.of(4, [(3, 3)])
    with pytest.raises(AugmentationOverlapError):
        augment(Chat, D, 3, 1)


def test_row_monomial():
    D = Diagram.of(5, [(3, 3), (4, 3)])
    assert row_monomial(D) == Monomial.of(3, 4)
    assert row_monomial(Diagram.of(3, [])) == Monomial()
    assert row_monomial(Diagram.of(3, [(2, 1), (2, 3)])) == Monomial({2: 2})


@given(diagrams)
def test_diagram_json_round_trip(D):
    assert Diagram.from_json(D.to_json()) == D
