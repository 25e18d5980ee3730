"""Linear codes over prime fields and the subspace operations on them.

A code is stored as a canonical generator matrix (reduced row echelon
form, zero rows dropped) together with an ordered tuple of coordinate
labels.  Canonical storage makes subspace equality a plain tuple
comparison, which the bound machinery relies on throughout.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple

from . import fields
from .guards import check_enumeration

Word = Tuple[int, ...]


@dataclass(frozen=True)
class LinearCode:
    """A linear code C over GF(q) on an ordered coordinate index set."""

    q: int
    index_set: Tuple[str, ...]
    generators: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        fields.check_prime_field(self.q)
        if len(set(self.index_set)) != len(self.index_set):
            raise ValueError("duplicate coordinate labels")
        for row in self.generators:
            if len(row) != len(self.index_set):
                raise ValueError("generator width does not match index set")

    @property
    def n(self) -> int:
        return len(self.index_set)

    @property
    def dim(self) -> int:
        return len(self.generators)

    def position(self, label: str) -> int:
        try:
            return self.index_set.index(label)
        except ValueError:
            raise KeyError(f"unknown coordinate label {label!r}") from None

    def contains(self, word: Sequence[int]) -> bool:
        if len(word) != self.n:
            raise ValueError("word length does not match code length")
        return fields.in_row_space(list(word), [list(g) for g in self.generators], self.q)

    def codewords(self, max_bits: int | None = None) -> Iterator[Word]:
        """Enumerate all q**dim codewords (guarded)."""
        check_enumeration(self.q ** self.dim, max_bits, "codeword enumeration")
        q, gens = self.q, self.generators
        for coeffs in itertools.product(range(q), repeat=self.dim):
            word = [0] * self.n
            for c, g in zip(coeffs, gens):
                if c:
                    word = [(w + c * x) % q for w, x in zip(word, g)]
            yield tuple(word)


def canonicalize(raw_generators: Iterable[Sequence[int]], index_set: Sequence[str], q: int) -> LinearCode:
    """Build a LinearCode from generators in any form.

    The stored generator matrix is the RREF of the input with zero rows
    removed, so two inputs with equal row spaces canonicalize to equal
    codes.
    """
    labels = tuple(str(x) for x in index_set)
    rows = [list(r) for r in raw_generators]
    for r in rows:
        if len(r) != len(labels):
            raise ValueError(f"generator has {len(r)} columns, index set has {len(labels)}")
    reduced, _ = fields.rref(rows, q)
    return LinearCode(q=q, index_set=labels, generators=tuple(tuple(r) for r in reduced))


def zero_code(index_set: Sequence[str], q: int) -> LinearCode:
    return canonicalize([], index_set, q)


def full_space(index_set: Sequence[str], q: int) -> LinearCode:
    n = len(index_set)
    eye = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    return canonicalize(eye, index_set, q)


def _restrict_labels(code: LinearCode, J: Iterable[str]) -> List[int]:
    """Positions of the labels in J, in the order inherited from the code."""
    J = set(J)
    unknown = J - set(code.index_set)
    if unknown:
        raise KeyError(f"unknown coordinate labels: {sorted(unknown)}")
    return [i for i, lbl in enumerate(code.index_set) if lbl in J]


def project(code: LinearCode, J: Iterable[str]) -> LinearCode:
    """The projection C|_J: every codeword restricted to the labels in J."""
    positions = _restrict_labels(code, J)
    labels = tuple(code.index_set[i] for i in positions)
    rows = [[g[i] for i in positions] for g in code.generators]
    return canonicalize(rows, labels, code.q)


def cross_section(code: LinearCode, J: Iterable[str]) -> LinearCode:
    """The cross-section C_J: restrictions of codewords vanishing outside J.

    Computed by row reducing with the complement columns first; rows of
    the reduced matrix that vanish on the complement span C_J.
    """
    positions = _restrict_labels(code, J)
    inside = set(positions)
    outside = [i for i in range(code.n) if i not in inside]
    order = outside + positions
    rows = [[g[i] for i in order] for g in code.generators]
    reduced, _ = fields.rref(rows, code.q)
    cut = len(outside)
    kept = [row[cut:] for row in reduced if all(x == 0 for x in row[:cut])]
    labels = tuple(code.index_set[i] for i in positions)
    return canonicalize(kept, labels, code.q)


def direct_sum(codes: Sequence[LinearCode]) -> LinearCode:
    """Block-diagonal sum of codes on pairwise disjoint index sets."""
    if not codes:
        raise ValueError("direct_sum of no codes")
    q = codes[0].q
    for c in codes:
        if c.q != q:
            raise ValueError("direct_sum requires a common field")
    labels: List[str] = []
    for c in codes:
        for lbl in c.index_set:
            if lbl in labels:
                raise ValueError(f"overlapping index sets: label {lbl!r} repeats")
            labels.append(lbl)
    n = len(labels)
    rows: List[List[int]] = []
    offset = 0
    for c in codes:
        for g in c.generators:
            rows.append([0] * offset + list(g) + [0] * (n - offset - c.n))
        offset += c.n
    return canonicalize(rows, labels, q)


def minimum_distance(code: LinearCode, max_bits: int | None = None) -> int:
    """Least Hamming weight of a nonzero codeword, by exhaustive enumeration."""
    if code.dim == 0:
        raise ValueError("minimum distance of the zero code is undefined")
    best = None
    for word in code.codewords(max_bits):
        w = sum(1 for x in word if x != 0)
        if w > 0 and (best is None or w < best):
            best = w
    assert best is not None
    return best


def parity_check_rows(code: LinearCode) -> List[List[int]]:
    """Rows h with h . c = 0 exactly for the codewords c of the code."""
    gens = [list(g) for g in code.generators]
    return fields.nullspace(gens, code.n, code.q)


def dual_code(code: LinearCode) -> LinearCode:
    return canonicalize(parity_check_rows(code), code.index_set, code.q)


def permute_columns(code: LinearCode, new_order: Sequence[str]) -> LinearCode:
    """The same code re-indexed so its labels appear in new_order."""
    if set(new_order) != set(code.index_set) or len(new_order) != code.n:
        raise ValueError("new_order must be a permutation of the index set")
    positions = [code.position(lbl) for lbl in new_order]
    rows = [[g[i] for i in positions] for g in code.generators]
    return canonicalize(rows, tuple(new_order), code.q)


def relabel(code: LinearCode, mapping: dict[str, str]) -> LinearCode:
    """Rename coordinates in place; the matrix is unchanged."""
    labels = tuple(mapping.get(lbl, lbl) for lbl in code.index_set)
    return canonicalize([list(g) for g in code.generators], labels, code.q)
