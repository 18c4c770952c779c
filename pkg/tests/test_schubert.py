import pytest
from hypothesis import given, settings, strategies as st

from schubpat.diagrams import rothe
from schubpat.errors import LengthGuardError, PatternViolationError
from schubpat.permwords import Permutation, all_permutations, avoids, pattern_count
from schubpat.polyx import Monomial, Polynomial, x
from schubpat.schubert import (
    coefficient_by_counting,
    diagram_sum,
    divided_difference,
    macdonald_oracle,
    principal_specialization,
    reduced_words,
    schubert_diagram,
    schubert_divdiff,
    schubert_divdiff_alt,
)

perms = lambda n: st.permutations(list(range(1, n + 1))).map(lambda v: Permutation(tuple(v)))


def test_divided_difference_examples():
    # d_1 (x_1^2 x_2) = x_1 x_2
    assert divided_difference(x(1) * x(1) * x(2), 1) == x(1) * x(2)
    assert divided_difference(x(1), 1) == Polynomial.constant(1)
    assert divided_difference(x(1) * x(2), 1) == Polynomial.zero()
    assert divided_difference(x(3), 1) == Polynomial.zero()


@settings(max_examples=60)
@given(st.integers(1, 3), st.integers(1, 3), st.integers(0, 3), st.integers(0, 3))
def test_divided_difference_is_twisted_derivation(i, j, a, b):
    # d_i(fg) = d_i(f) g + (s_i f) d_i(g)
    f = Polynomial.from_monomial(Monomial({j: a}))
    g = Polynomial.from_monomial(Monomial({i: b})) + x(j)
    swap = {v: v for v in range(1, 5)}
    swap[i], swap[i + 1] = i + 1, i
    lhs = divided_difference(f * g, i)
    rhs = divided_difference(f, i) * g + f.substitute_variables(swap) * divided_difference(g, i)
    assert lhs == rhs


def test_schubert_worked_examples():
    assert schubert_divdiff(Permutation.from_string("2143")) == (
        x(1) * x(1) + x(1) * x(2) + x(1) * x(3)
    )
    assert schubert_divdiff(Permutation.from_string("1342")) == (
        x(1) * x(2) + x(1) * x(3) + x(2) * x(3)
    )
    assert schubert_divdiff(Permutation.from_string("132")) == x(1) + x(2)
    assert schubert_divdiff(Permutation.from_string("21")) == x(1)
    assert schubert_divdiff(Permutation.identity(4)) == Polynomial.constant(1)
    assert schubert_divdiff(Permutation(())) == Polynomial.constant(1)


def test_schubert_longest_element():
    w0 = Permutation.from_string("4321")
    assert schubert_divdiff(w0) == Polynomial.from_monomial(Monomial({1: 3, 2: 2, 3: 1}))


@pytest.mark.parametrize("n", range(1, 6))
def test_ascent_walks_agree(n):
    # first-ascent and last-ascent recursions take different reduced paths
    for w in all_permutations(n):
        assert schubert_divdiff(w) == schubert_divdiff_alt(w)


@pytest.mark.parametrize("n", range(1, 6))
def test_diagram_sum_matches_divdiff_on_avoiders(n):
    for w in all_permutations(n):
        if avoids(w):
            assert schubert_diagram(w) == schubert_divdiff(w)


def test_schubert_diagram_rejects_forbidden_patterns():
    with pytest.raises(PatternViolationError):
        schubert_diagram(Permutation.from_string("1432"))
    with pytest.raises(PatternViolationError):
        schubert_diagram(Permutation.from_string("15243"))


def test_diagram_sum_overcounts_on_1432():
    w = Permutation.from_string("1432")
    s, d = schubert_divdiff(w), diagram_sum(w)
    assert s != d
    # the diagram sum dominates coefficientwise and strictly somewhere
    assert (d - s).is_nonnegative()[0]
    assert d.evaluate_all_ones() > s.evaluate_all_ones()


def test_coefficient_by_counting():
    w = Permutation.from_string("2143")
    assert coefficient_by_counting(w, Monomial({1: 2})) == 1
    assert coefficient_by_counting(w, Monomial.of(1, 3)) == 1
    assert coefficient_by_counting(w, Monomial.of(2, 3)) == 0


@pytest.mark.parametrize("n", range(1, 6))
def test_schubert_coefficients_nonnegative_and_homogeneous(n):
    for w in all_permutations(n):
        p = schubert_divdiff(w)
        assert p.is_nonnegative()[0]
        assert p.is_homogeneous()
        assert p.degree() == w.inversions()


def test_reduced_words_examples():
    assert set(reduced_words(Permutation.from_string("321"))) == {(1, 2, 1), (2, 1, 2)}
    assert list(reduced_words(Permutation.identity(3))) == [()]
    assert set(reduced_words(Permutation.from_string("1342"))) == {(2, 3)}


@pytest.mark.parametrize("n", range(1, 6))
def test_macdonald_oracle_matches_specialization(n):
    for w in all_permutations(n):
        assert macdonald_oracle(w) == principal_specialization(w)


def test_macdonald_length_guard():
    with pytest.raises(LengthGuardError):
        macdonald_oracle(Permutation.from_string("654321"), max_length=12)


@pytest.mark.parametrize("n", range(1, 7))
def test_specialization_lower_bound(n):
    # S_w(1,...,1) >= 1 + (# of 132 patterns) + (# of 1432 patterns)
    p132 = Permutation.from_string("132")
    p1432 = Permutation.from_string("1432")
    for w in all_permutations(n):
        bound = 1 + pattern_count(p132, w) + pattern_count(p1432, w)
        assert principal_specialization(w) >= bound


@given(st.integers(1, 5).flatmap(perms), st.integers(1, 7))
def test_schubert_stable_under_embedding(w, pad):
    assert schubert_divdiff(w.embed(w.n + pad % 3)) == schubert_divdiff(w)


def test_degree_equals_diagram_size():
    for w in all_permutations(5):
        assert schubert_divdiff(w).degree() == len(rothe(w))
