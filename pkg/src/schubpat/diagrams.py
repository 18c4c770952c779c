"""Box diagrams in [n] x [n], Rothe diagrams and the dominance order.

A diagram is a set of boxes (i, j) with 1 <= i, j <= n; column j is the
set of row indices occupied in that column.  Restriction never reindexes;
deleting an empty row/column and renumbering is a separate operation
(see weylchar.compress).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import AugmentationOverlapError, NotASubwordError
from .permwords import Permutation, Word, is_subword, substitution_indices
from .polyx import Monomial


@dataclass(frozen=True)
class Diagram:
    """A finite box set in [n] x [n]."""

    n: int
    boxes: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        for (i, j) in self.boxes:
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"box {(i, j)} outside [{self.n}] x [{self.n}]")

    @classmethod
    def of(cls, n: int, boxes: Iterable[tuple[int, int]]) -> "Diagram":
        return cls(n, frozenset(tuple(b) for b in boxes))

    def column(self, j: int) -> tuple[int, ...]:
        """Sorted row indices of the boxes in column j."""
        return tuple(sorted(i for (i, jj) in self.boxes if jj == j))

    def row(self, i: int) -> tuple[int, ...]:
        return tuple(sorted(j for (ii, j) in self.boxes if ii == i))

    def columns(self) -> list[tuple[int, ...]]:
        cols: list[list[int]] = [[] for _ in range(self.n)]
        for (i, j) in self.boxes:
            cols[j - 1].append(i)
        return [tuple(sorted(c)) for c in cols]

    def box_list(self) -> list[tuple[int, int]]:
        """Boxes sorted row-major; the canonical serialization order."""
        return sorted(self.boxes)

    def __len__(self) -> int:
        return len(self.boxes)

    def __contains__(self, box: tuple[int, int]) -> bool:
        return box in self.boxes

    def union(self, other: "Diagram") -> "Diagram":
        return Diagram(max(self.n, other.n), self.boxes | other.boxes)

    def difference(self, other: "Diagram") -> "Diagram":
        return Diagram(self.n, self.boxes - other.boxes)

    def to_json(self) -> dict:
        return {"n": self.n, "boxes": [list(b) for b in self.box_list()]}

    @classmethod
    def from_json(cls, data: dict) -> "Diagram":
        return cls.of(data["n"], [tuple(b) for b in data["boxes"]])

    def __str__(self) -> str:
        return "{" + ", ".join(f"({i},{j})" for (i, j) in self.box_list()) + "}"


def rothe(w: Permutation) -> Diagram:
    """The inversion diagram {(i,j) : i < w^{-1}(j) and j < w(i)}."""
    winv = w.inverse()
    n = w.n
    boxes = {
        (i, j)
        for i in range(1, n + 1)
        for j in range(1, w(i))
        if i < winv(j)
    }
    return Diagram(n, frozenset(boxes))


def has_northwest_property(D: Diagram) -> bool:
    """Whether (r,c') and (r',c) with r<r', c<c' always force (r,c)."""
    boxes = D.boxes
    for (r, cp) in boxes:
        for (rp, c) in boxes:
            if r < rp and c < cp and (r, c) not in boxes:
                return False
    return True


def column_dominates(R: Iterable[int], S: Iterable[int]) -> bool:
    """R <= S: equal sizes and k-th least of R <= k-th least of S for all k."""
    r, s = sorted(R), sorted(S)
    return len(r) == len(s) and all(a <= b for a, b in zip(r, s))


def dominates(C: Diagram, D: Diagram) -> bool:
    """C <= D columnwise."""
    if C.n != D.n:
        raise ValueError(f"size mismatch: {C.n} vs {D.n}")
    return all(column_dominates(c, d) for c, d in zip(C.columns(), D.columns()))


def _column_dominated_sets(d: tuple[int, ...]) -> list[tuple[int, ...]]:
    """All strictly increasing tuples c with c_t <= d_t, in lexicographic order."""
    out: list[tuple[int, ...]] = []

    def rec(t: int, lo: int, acc: list[int]):
        if t == len(d):
            out.append(tuple(acc))
            return
        for c in range(lo + 1, d[t] + 1):
            acc.append(c)
            rec(t + 1, c, acc)
            acc.pop()

    rec(0, 0, [])
    return out


def enumerate_dominated(D: Diagram) -> Iterator[Diagram]:
    """Stream every C <= D exactly once (cartesian product over columns)."""
    per_column = [_column_dominated_sets(d) for d in D.columns()]
    for choice in itertools.product(*per_column):
        boxes = frozenset(
            (i, j) for j, rows in enumerate(choice, start=1) for i in rows
        )
        yield Diagram(D.n, boxes)


def count_dominated(D: Diagram) -> int:
    """len(list(enumerate_dominated(D))) without materializing anything."""
    total = 1
    for d in D.columns():
        total *= _count_column(d)
    return total


def _count_column(d: tuple[int, ...]) -> int:
    # chains c_1 < ... < c_m with c_t <= d_t, counted by recursion on t
    def ways(t: int, lo: int) -> int:
        if t == len(d):
            return 1
        return sum(ways(t + 1, c) for c in range(lo + 1, d[t] + 1))

    return ways(0, 0)


def restrict_keep(D: Diagram, K: Iterable[int], L: Iterable[int]) -> Diagram:
    """Keep only boxes in rows K and columns L; same grid, no reindexing."""
    ks, ls = set(K), set(L)
    return Diagram(D.n, frozenset(b for b in D.boxes if b[0] in ks and b[1] in ls))


def restrict_remove(D: Diagram, k: int, l: int) -> Diagram:
    """Remove every box in row k or column l."""
    return Diagram(D.n, frozenset(b for b in D.boxes if b[0] != k and b[1] != l))


def hat_v(C: Diagram, w: Permutation, v: Word) -> Diagram:
    """Restriction of C to the rows and columns corresponding to the subword v."""
    if not is_subword(v, w.word()):
        raise NotASubwordError(f"{v} is not a subword of {w.word()}")
    K = substitution_indices(w, v)
    L = v.letter_set()
    return restrict_keep(C, K, L)


def augment(Chat: Diagram, D: Diagram, k: int, l: int) -> Diagram:
    """Chat plus all of D's boxes in row k and column l."""
    overlap = [b for b in Chat.boxes if b[0] == k or b[1] == l]
    if overlap:
        raise AugmentationOverlapError(
            f"diagram already has boxes in row {k}/column {l}: {sorted(overlap)}"
        )
    extra = frozenset(b for b in D.boxes if b[0] == k or b[1] == l)
    return Diagram(max(Chat.n, D.n), Chat.boxes | extra)


def row_monomial(D: Diagram) -> Monomial:
    """x^D: one factor x_i per box of D in row i."""
    return Monomial.of(*(i for (i, _) in D.boxes))
