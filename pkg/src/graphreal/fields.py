"""Exact linear algebra over prime fields GF(p).

Matrices are plain lists of rows, each row a list of ints reduced mod p.
Everything here is deterministic: row reduction always picks the pivot in
the lowest available column, so two matrices with the same row space
reduce to the identical canonical form.
"""

from __future__ import annotations

from typing import Iterable, List, Sequence

Row = List[int]
Rows = List[Row]


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q < 4:
        return True
    if q % 2 == 0:
        return False
    f = 3
    while f * f <= q:
        if q % f == 0:
            return False
        f += 2
    return True


def check_prime_field(q: int) -> int:
    """Validate a field order; only prime fields are supported."""
    if not isinstance(q, int) or not is_prime(q):
        raise ValueError(f"field order must be a prime integer, got {q!r}")
    return q


def inv_mod(a: int, q: int) -> int:
    a %= q
    if a == 0:
        raise ZeroDivisionError("no inverse of 0")
    return pow(a, q - 2, q)


def rref(rows: Iterable[Sequence[int]], q: int) -> tuple[Rows, List[int]]:
    """Reduced row echelon form with zero rows removed.

    Returns (rows, pivot_columns).  Pivots are scanned left to right, so
    the result is the unique canonical basis of the row space.
    """
    work: Rows = [[int(x) % q for x in row] for row in rows]
    if not work:
        return [], []
    ncols = len(work[0])
    for row in work:
        if len(row) != ncols:
            raise ValueError("ragged matrix")
    pivots: List[int] = []
    r = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(r, len(work)):
            if work[i][col] % q != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        inv = inv_mod(work[r][col], q)
        work[r] = [(x * inv) % q for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][col] % q != 0:
                factor = work[i][col]
                work[i] = [(a - factor * b) % q for a, b in zip(work[i], work[r])]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def rank(rows: Iterable[Sequence[int]], q: int) -> int:
    reduced, _ = rref(rows, q)
    return len(reduced)


def nullspace(rows: Sequence[Sequence[int]], ncols: int, q: int) -> Rows:
    """Canonical basis of {x : M x = 0} for the matrix M given by rows."""
    reduced, pivots = rref(rows, q)
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis: Rows = []
    for free in free_cols:
        vec = [0] * ncols
        vec[free] = 1
        for r, pc in enumerate(pivots):
            vec[pc] = (-reduced[r][free]) % q
        basis.append(vec)
    return basis


def reduce_against(row: Sequence[int], basis: Sequence[Sequence[int]], pivots: Sequence[int], q: int) -> Row:
    """Reduce a row against an RREF basis; result is zero iff row is in the span."""
    out = [int(x) % q for x in row]
    for b, pc in zip(basis, pivots):
        if out[pc] % q != 0:
            factor = out[pc]
            out = [(a - factor * c) % q for a, c in zip(out, b)]
    return out


def in_row_space(row: Sequence[int], rows: Sequence[Sequence[int]], q: int) -> bool:
    basis, pivots = rref(rows, q)
    return all(x % q == 0 for x in reduce_against(row, basis, pivots, q))


def solve_combination(basis_rows: Sequence[Sequence[int]], target: Sequence[int], q: int) -> Row | None:
    """Coefficients u with sum_i u[i] * basis_rows[i] == target, or None.

    The basis rows must be linearly independent, so the solution, when it
    exists, is unique.
    """
    k = len(basis_rows)
    if k == 0:
        return [] if all(x % q == 0 for x in target) else None
    n = len(target)
    # Solve u @ B = t by row reducing [B^T | t^T].
    augmented = [[basis_rows[j][i] % q for j in range(k)] + [target[i] % q] for i in range(n)]
    reduced, pivots = rref(augmented, q)
    coeffs = [0] * k
    for row, pc in zip(reduced, pivots):
        if pc == k:
            return None  # inconsistent system
        coeffs[pc] = row[k]
    return coeffs


def matmul_vec(rows: Sequence[Sequence[int]], vec: Sequence[int], q: int) -> Row:
    return [sum(a * b for a, b in zip(row, vec)) % q for row in rows]
