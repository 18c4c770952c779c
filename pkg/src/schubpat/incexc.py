"""Alternating pattern expansions and the pattern-expansion coefficients c_w.

The central object is the signed sum over subwords v between u and w of
M_{w,v} * S_{perm(v)} evaluated in the variables picked out by w^{-1};
it is nonnegative whenever w avoids 1432 and 1423.  Setting all
variables to 1 yields the coefficients c_w, computable three independent
ways: by inclusion-exclusion, by the defining recursion, and (for
avoiders) by counting non-augmentation diagrams.
"""
from __future__ import annotations

from dataclasses import dataclass

from .diagrams import (
    Diagram,
    augment,
    dominates,
    enumerate_dominated,
    hat_v,
    restrict_remove,
    rothe,
    row_monomial,
)
from .errors import PatternViolationError
from .permwords import (
    Permutation,
    Word,
    avoids,
    flatten,
    remove_position,
    subwords_between,
    substitution_indices,
)
from .polyx import Monomial, Polynomial
from .schubert import principal_specialization, schubert_divdiff


def m_monomial(w: Permutation, v: Word) -> Monomial:
    """x over the boxes of D(w) outside the restriction to v's rows/columns."""
    D = rothe(w)
    return row_monomial(D.difference(hat_v(D, w, v)))


def substituted_schubert(w: Permutation, v: Word) -> Polynomial:
    """S_{perm(v)} with its i-th variable sent to x at w^{-1}(v(i))."""
    indices = substitution_indices(w, v)
    p = schubert_divdiff(flatten(v))
    sigma = {i: indices[i - 1] for i in range(1, len(indices) + 1)}
    return p.substitute_variables(sigma)


@dataclass(frozen=True)
class SumTerm:
    v: Word
    sign: int
    monomial: Monomial
    schubert: Polynomial


@dataclass(frozen=True)
class AlternatingSumResult:
    w: Permutation
    u: Word
    total: Polynomial
    per_term: tuple[SumTerm, ...]

    def to_json(self) -> dict:
        return {
            "w": str(self.w),
            "u": str(self.u),
            "sum": self.total.to_json(self.w.n),
            "terms": [
                {
                    "v": str(t.v),
                    "sign": t.sign,
                    "M": Polynomial.from_monomial(t.monomial).to_json(self.w.n)["terms"][0]["exp"],
                    "schubert": t.schubert.to_json(self.w.n),
                }
                for t in self.per_term
            ],
        }


def alternating_sum(w: Permutation, u: Word, keep_terms: bool = True) -> AlternatingSumResult:
    """The signed sum of M_{w,v} * substituted Schubert over u <= v <= word(w)."""
    total = Polynomial.zero()
    terms: list[SumTerm] = []
    for v in subwords_between(u, w):
        sign = 1 if (len(w) - len(v)) % 2 == 0 else -1
        m = m_monomial(w, v)
        s = substituted_schubert(w, v)
        total = total + s * Polynomial.from_monomial(m, sign)
        if keep_terms:
            terms.append(SumTerm(v, sign, m, s))
    return AlternatingSumResult(w, u, total, tuple(terms))


def restricted_diagram_count(w: Permutation, v: Word, m: Monomial) -> int:
    """#{C <= hat(D(w))_v with x^C = m and boxes only in v's rows}."""
    if not avoids(w):
        raise PatternViolationError(f"{w} contains 1432 or 1423")
    K = set(substitution_indices(w, v))
    Dv = hat_v(rothe(w), w, v)
    count = 0
    for C in enumerate_dominated(Dv):
        if row_monomial(C) == m and all(i in K for (i, _) in C.boxes):
            count += 1
    return count


def bv_count(w: Permutation, u: Word, m: Monomial) -> int:
    """|B_w minus the union of B_v over codimension-one v|, by enumeration.

    B_v collects the diagrams C <= D(w) with x^C = m whose boxes outside
    the v-restriction are exactly the boxes of D(w) outside its own
    v-restriction.
    """
    if not avoids(w):
        raise PatternViolationError(f"{w} contains 1432 or 1423")
    D = rothe(w)
    between = subwords_between(u, w)
    codim_one = [v for v in between if len(v) == len(w) - 1]

    def in_bv(C: Diagram, v: Word) -> bool:
        return C.difference(hat_v(C, w, v)).boxes == D.difference(hat_v(D, w, v)).boxes

    count = 0
    for C in enumerate_dominated(D):
        if row_monomial(C) != m:
            continue
        if not any(in_bv(C, v) for v in codim_one):
            count += 1
    return count


_cw_cache: dict[tuple[int, ...], int] = {}


def cw_inclusion_exclusion(w: Permutation) -> int:
    """c_w as the signed sum of principal specializations over subwords."""
    total = 0
    word_w = w.word()
    n = len(word_w)
    for v in subwords_between(Word(), w):
        sign = 1 if (n - len(v)) % 2 == 0 else -1
        total += sign * principal_specialization(flatten(v))
    return total


def cw_recursive(w: Permutation) -> int:
    """c_w by the defining recursion: S_w(1) minus c over all proper subwords."""
    key = w.values
    cached = _cw_cache.get(key)
    if cached is not None:
        return cached
    total = principal_specialization(w)
    # c of the empty permutation is 1 and accounts for the classical -1.
    for v in subwords_between(Word(), w):
        if len(v) == len(w):
            continue
        total -= cw_recursive(flatten(v)) if len(v) else 1
    _cw_cache[key] = total
    return total


def is_augmentation(C: Diagram, D: Diagram, k: int, l: int) -> bool:
    """Whether C = augment(Chat, D, k, l) for some Chat <= restrict_remove(D, k, l)."""
    seed = frozenset(b for b in D.boxes if b[0] == k or b[1] == l)
    c_seed = frozenset(b for b in C.boxes if b[0] == k or b[1] == l)
    if c_seed != seed:
        return False
    Chat = restrict_remove(C, k, l)
    Dhat = restrict_remove(D, k, l)
    cols_c, cols_d = Chat.columns(), Dhat.columns()
    if any(len(a) != len(b) for a, b in zip(cols_c, cols_d)):
        return False
    return dominates(Chat, Dhat)


def cw_augmentation(w: Permutation) -> int:
    """c_w as the number of dominated diagrams that are not augmentations.

    The removed pairs range over (k, w_k) for every position k.
    """
    if not avoids(w):
        raise PatternViolationError(f"{w} contains 1432 or 1423")
    D = rothe(w)
    count = 0
    for C in enumerate_dominated(D):
        if not any(is_augmentation(C, D, k, w(k)) for k in range(1, w.n + 1)):
            count += 1
    return count


def single_step_monomial(sigma: Permutation, k: int) -> Monomial:
    """x over the boxes of D(sigma) in row k or column sigma_k."""
    D = rothe(sigma)
    return Monomial.of(*(i for (i, j) in D.boxes if i == k or j == sigma(k)))


def verify_single_step(sigma: Permutation, k: int) -> tuple[bool, Polynomial]:
    """Check S_sigma - M * S_pi(x_1,...,skip x_k,...,x_n) has no negative term.

    pi is the pattern of sigma at the positions other than k; returns the
    difference polynomial alongside the verdict.
    """
    pi = flatten(remove_position(sigma, k))
    m = single_step_monomial(sigma, k)
    sub = schubert_divdiff(pi).substitute_variables(
        {i: (i if i < k else i + 1) for i in range(1, sigma.n)}
    )
    diff = schubert_divdiff(sigma) - sub * Polynomial.from_monomial(m)
    ok, _ = diff.is_nonnegative()
    return ok, diff


def clear_caches() -> None:
    _cw_cache.clear()
