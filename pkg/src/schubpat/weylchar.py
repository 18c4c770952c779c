"""Dual characters of flagged Weyl modules, computed exactly.

The module attached to a diagram D is spanned by products over the
columns j of determinants det(Y^{C_j}_{D_j}), where Y is the generic
upper-triangular matrix and C ranges over the diagrams dominated by D.
The coefficient of a monomial m in the dual character equals the rank of
the span of the products whose diagrams have row monomial m.

y_{ij} variables live in the shared polynomial engine through the pair
index (i, j) -> polyx.pair_index(i, j).
"""
from __future__ import annotations

from .diagrams import (
    Diagram,
    column_dominates,
    count_dominated,
    enumerate_dominated,
    restrict_remove,
    rothe,
    row_monomial,
)
from .errors import BudgetExceededError, NonemptyRowOrColumnError
from .linalg import integer_rank
from .permwords import Permutation
from .polyx import Monomial, Polynomial, pair_index

DEFAULT_BUDGET = 10**6

_det_cache: dict[tuple[tuple[int, ...], tuple[int, ...]], Polynomial] = {}


def y_determinant(rows, cols, n: int | None = None) -> Polynomial:
    """det of the submatrix of Y with the given rows and columns.

    Zero unless the row set dominates the column set elementwise; the
    expansion is exact, by cofactors along the first column, memoized on
    the (rows, cols) pair.  n is accepted for interface symmetry only.
    """
    r, c = tuple(sorted(rows)), tuple(sorted(cols))
    if len(r) != len(c):
        raise ValueError(f"size mismatch: rows {r} vs columns {c}")
    return _det(r, c)


def _det(rows: tuple[int, ...], cols: tuple[int, ...]) -> Polynomial:
    if not rows:
        return Polynomial.constant(1)
    cached = _det_cache.get((rows, cols))
    if cached is not None:
        return cached
    # Entry (i, j) of Y is y_{ij} when i <= j and 0 below the diagonal.
    result = Polynomial.zero()
    c0 = cols[0]
    for t, r in enumerate(rows):
        if r > c0:
            break
        sign = -1 if t % 2 else 1
        minor = _det(rows[:t] + rows[t + 1 :], cols[1:])
        result = result + minor * Polynomial.from_monomial(
            Monomial.of(pair_index(r, c0)), sign
        )
    _det_cache[(rows, cols)] = result
    return result


def determinant_product(C: Diagram, D: Diagram) -> Polynomial:
    """Product over columns j of det(Y^{C_j}_{D_j})."""
    result = Polynomial.constant(1)
    for cj, dj in zip(C.columns(), D.columns()):
        if not cj and not dj:
            continue
        if not column_dominates(cj, dj):
            return Polynomial.zero()
        result = result * _det(tuple(cj), tuple(dj))
    return result


def _span_rank(diagrams: list[Diagram], D: Diagram) -> int:
    """Rank of the span of the determinant products of the given diagrams."""
    if not diagrams:
        return 0
    polys = [determinant_product(C, D) for C in diagrams]
    columns: dict[Monomial, int] = {}
    for p in polys:
        for mon, _ in p.terms():
            if mon not in columns:
                columns[mon] = len(columns)
    if not columns:
        return 0
    matrix = []
    for p in polys:
        row = [0] * len(columns)
        for mon, coef in p.terms():
            row[columns[mon]] = coef
        matrix.append(row)
    return integer_rank(matrix)


def chi_coefficient(D: Diagram, m: Monomial) -> int:
    """Coefficient of m in the dual character of D's flagged Weyl module."""
    matching = [C for C in enumerate_dominated(D) if row_monomial(C) == m]
    return _span_rank(matching, D)


def chi(D: Diagram, budget: int = DEFAULT_BUDGET) -> Polynomial:
    """The full dual character; refuses when the dominated count is too big."""
    total = count_dominated(D)
    if total > budget:
        raise BudgetExceededError(f"{total} dominated diagrams exceed budget {budget}")
    groups: dict[Monomial, list[Diagram]] = {}
    for C in enumerate_dominated(D):
        groups.setdefault(row_monomial(C), []).append(C)
    terms: dict[Monomial, int] = {}
    for mon, diagrams in groups.items():
        coef = _span_rank(diagrams, D)
        if coef:
            terms[mon] = coef
    return Polynomial(terms)


def compress(D: Diagram, k: int, l: int) -> Diagram:
    """Delete the (empty) row k and column l and renumber past them."""
    bad = [b for b in D.boxes if b[0] == k or b[1] == l]
    if bad:
        raise NonemptyRowOrColumnError(
            f"row {k}/column {l} not empty: {sorted(bad)}"
        )
    boxes = frozenset(
        (i - (i > k), j - (j > l)) for (i, j) in D.boxes
    )
    return Diagram(max(D.n - 1, 0), boxes)


def diagram_permutation(D: Diagram) -> Permutation | None:
    """The permutation whose Rothe diagram is D, or None if there is none."""
    if D.n == 0:
        return Permutation(())
    code = [len(D.row(i)) for i in range(1, D.n + 1)]
    available = list(range(1, D.n + 1))
    values = []
    for c in code:
        if c >= len(available):
            return None
        values.append(available.pop(c))
    w = Permutation(tuple(values))
    return w if rothe(w) == D else None


def chi_fast(D: Diagram, budget: int = DEFAULT_BUDGET) -> Polynomial:
    """chi(D), taking the Schubert shortcut when D is a Rothe diagram.

    The shortcut is legitimate for every permutation (the dual character
    of a Rothe diagram is the Schubert polynomial); the direct rank
    computation remains available through chi() and is cross-checked in
    the verification suites.
    """
    from .schubert import schubert_divdiff

    w = diagram_permutation(D)
    if w is not None:
        return schubert_divdiff(w)
    return chi(D, budget)


def clear_caches() -> None:
    _det_cache.clear()
