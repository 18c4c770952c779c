"""Purple boxes, purple families and single-removal monomial factors.

For a diagram D and a removed row k / column l, the purple boxes are the
positions reachable in some dominated diagram but never in the row/column
restriction of one; the purple family is the dominance down-set of the
removed-box seed inside the purple boxes.  The row monomial of any family
member is a valid factor in front of the restricted character.
"""
from __future__ import annotations

from dataclasses import dataclass

from .diagrams import (
    Diagram,
    _column_dominated_sets,
    column_dominates,
    enumerate_dominated,
    restrict_remove,
    rothe,
    row_monomial,
)
from .errors import NotInFamilyError
from .permwords import Permutation, flatten, remove_position
from .polyx import Monomial, Polynomial
from .schubert import schubert_divdiff
from .weylchar import chi_fast


def purple_boxes(D: Diagram, k: int, l: int) -> frozenset[tuple[int, int]]:
    """Boxes hit by some dominated diagram but by no row/column-restricted one.

    Both conditions decompose columnwise: on every other column a
    dominated diagram can keep D's own column, which restricts to itself.
    """
    out: set[tuple[int, int]] = set()
    for j in range(1, D.n + 1):
        dj = D.column(j)
        if not dj:
            continue
        subsets = _column_dominated_sets(dj)
        reachable = {i for S in subsets for i in S}
        if j == l:
            # boxes of column l never survive the restriction
            out.update((i, j) for i in reachable)
            continue
        k_in_d = k in dj
        dj_hat = tuple(i for i in dj if i != k)
        restricted_reachable: set[int] = set()
        for S in subsets:
            if (k in S) != k_in_d:
                continue
            s_hat = tuple(i for i in S if i != k)
            if column_dominates(s_hat, dj_hat):
                restricted_reachable.update(s_hat)
        out.update((i, j) for i in reachable if i not in restricted_reachable)
    return frozenset(out)


def purple_boxes_bruteforce(D: Diagram, k: int, l: int) -> frozenset[tuple[int, int]]:
    """Whole-diagram oracle for purple_boxes; use only on small diagrams."""
    Dhat = restrict_remove(D, k, l)
    reachable: set[tuple[int, int]] = set()
    restricted: set[tuple[int, int]] = set()
    for C in enumerate_dominated(D):
        reachable.update(C.boxes)
        Chat = restrict_remove(C, k, l)
        cols_c, cols_d = Chat.columns(), Dhat.columns()
        if all(len(a) == len(b) for a, b in zip(cols_c, cols_d)) and all(
            column_dominates(a, b) for a, b in zip(cols_c, cols_d)
        ):
            restricted.update(Chat.boxes)
    return frozenset(reachable - restricted)


@dataclass(frozen=True)
class PurpleFamily:
    D: Diagram
    k: int
    l: int
    boxes: frozenset[tuple[int, int]]
    members: frozenset[Diagram]
    monomials: frozenset[Monomial]

    @property
    def seed(self) -> Diagram:
        return self.D.difference(restrict_remove(self.D, self.k, self.l))

    def to_json(self) -> dict:
        return {
            "D": self.D.to_json(),
            "k": self.k,
            "l": self.l,
            "purple_boxes": [list(b) for b in sorted(self.boxes)],
            "members": [m.to_json() for m in sorted(self.members, key=Diagram.box_list)],
            "monomials": [
                Polynomial.from_monomial(m).to_json(self.D.n)["terms"][0]["exp"]
                for m in sorted(self.monomials, key=Monomial.sort_key)
            ],
        }


def purple_family(D: Diagram, k: int, l: int) -> PurpleFamily:
    """The down-closure of the removed-box seed within the purple boxes.

    The defining closure descends one dominance step at a time; since
    dominance is transitive that reachable set is exactly the down-set of
    the seed, which is what gets enumerated here.
    """
    boxes = purple_boxes(D, k, l)
    seed = D.difference(restrict_remove(D, k, l))
    members = {seed}
    for K in enumerate_dominated(seed):
        if K.boxes <= boxes:
            members.add(K)
    monomials = frozenset(row_monomial(K) for K in members)
    return PurpleFamily(D, k, l, boxes, frozenset(members), monomials)


def verify_theorem_gen(
    D: Diagram,
    k: int,
    l: int,
    K: Diagram,
    chi_D: Polynomial | None = None,
    chi_hat: Polynomial | None = None,
) -> tuple[bool, Polynomial]:
    """Check chi_D - x^K * chi_{D restricted}(x_k = 0) has no negative term.

    Precomputed characters may be passed in when verifying many members
    of the same family.
    """
    family = purple_family(D, k, l)
    if K not in family.members:
        raise NotInFamilyError(f"{K} is not a member of the purple family of {D}")
    if chi_D is None:
        chi_D = chi_fast(D)
    if chi_hat is None:
        chi_hat = chi_fast(restrict_remove(D, k, l))
    diff = chi_D - chi_hat.substitute_zero(k) * Polynomial.from_monomial(row_monomial(K))
    ok, _ = diff.is_nonnegative()
    return ok, diff


@dataclass(frozen=True)
class MonomialCharacterization:
    sigma: Permutation
    k: int
    working: frozenset[Monomial]
    from_purple: frozenset[Monomial]
    extra: frozenset[Monomial]


def characterize_monomials(sigma: Permutation, k: int) -> MonomialCharacterization:
    """All monomials M with S_sigma - M * S_pi(skip x_k) nonnegative.

    pi is the single-removal pattern at position k.  A working M must
    send every monomial of the substituted S_pi into the support of
    S_sigma, so the candidates are the exact quotients of support
    monomials by one fixed monomial of the substituted S_pi; that set is
    a provably complete superset.
    """
    D = rothe(sigma)
    l = sigma(k)
    family = purple_family(D, k, l)
    s_sigma = schubert_divdiff(sigma)
    pi = flatten(remove_position(sigma, k))
    sub = schubert_divdiff(pi).substitute_variables(
        {i: (i if i < k else i + 1) for i in range(1, sigma.n)}
    )
    degree = len(family.seed)
    mu0 = min(sub.support(), key=Monomial.sort_key, default=Monomial())
    candidates = {
        m / mu0
        for m in s_sigma.support()
        if mu0.divides(m) and m.degree() - mu0.degree() == degree
    }
    candidates |= family.monomials
    working = set()
    for M in candidates:
        diff = s_sigma - sub * Polynomial.from_monomial(M)
        ok, _ = diff.is_nonnegative()
        if ok:
            working.add(M)
    return MonomialCharacterization(
        sigma,
        k,
        frozenset(working),
        frozenset(family.monomials),
        frozenset(working - family.monomials),
    )
