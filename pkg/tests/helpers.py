"""Brute-force oracles used across the test suite.

These deliberately avoid the library's row-reduction paths: spans are
enumerated word by word, dimensions are recovered by counting, and
memberships are set lookups.  Slow but independent.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence, Set, Tuple

Word = Tuple[int, ...]


def span_words(rows: Sequence[Sequence[int]], q: int, n: int) -> Set[Word]:
    """All q**len(rows) combinations of the rows (with repetition collapsed)."""
    out: Set[Word] = {tuple([0] * n)}
    for coeffs in itertools.product(range(q), repeat=len(rows)):
        word = [0] * n
        for c, row in zip(coeffs, rows):
            for i, x in enumerate(row):
                word[i] = (word[i] + c * x) % q
        out.add(tuple(word))
    return out


def dim_of(words: Set[Word], q: int) -> int:
    count = len(words)
    dim = 0
    while q**dim < count:
        dim += 1
    assert q**dim == count, "word set is not a subspace"
    return dim


def project_words(words: Iterable[Word], positions: Sequence[int]) -> Set[Word]:
    return {tuple(w[i] for i in positions) for w in words}


def cross_section_words(words: Iterable[Word], positions: Sequence[int], n: int) -> Set[Word]:
    outside = [i for i in range(n) if i not in set(positions)]
    return {
        tuple(w[i] for i in positions)
        for w in words
        if all(w[i] == 0 for i in outside)
    }


def min_weight(words: Iterable[Word]) -> int:
    best = None
    for w in words:
        wt = sum(1 for x in w if x)
        if wt and (best is None or wt < best):
            best = wt
    assert best is not None
    return best
