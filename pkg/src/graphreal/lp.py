"""Exact rational linear programming by two-phase primal simplex.

Coefficients, intermediate tableaus and the optimum are Fractions, so
optimal values are certificates rather than approximations.  Bland's
rule (lowest eligible index enters, lowest-index row among minimum
ratios leaves) guarantees termination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple


class Unbounded(Exception):
    """The objective decreases without bound over the feasible region."""


class Infeasible(Exception):
    """No point satisfies all constraints."""


@dataclass(frozen=True)
class LpSolution:
    value: Fraction
    assignment: Tuple[Fraction, ...]


def _pivot(tableau: List[List[Fraction]], basis: List[int], row: int, col: int) -> None:
    piv = tableau[row][col]
    tableau[row] = [x / piv for x in tableau[row]]
    for r in range(len(tableau)):
        if r != row and tableau[r][col] != 0:
            factor = tableau[r][col]
            tableau[r] = [a - factor * b for a, b in zip(tableau[r], tableau[row])]
    basis[row] = col


def _simplex(tableau: List[List[Fraction]], basis: List[int], cost: List[Fraction]) -> Fraction:
    """Minimize cost over the tableau rows (equality form, basis given).

    The tableau holds constraint rows [A | b]; reduced costs are kept in
    a separate working row.  Returns the optimal objective value.
    """
    m = len(tableau)
    width = len(tableau[0])
    ncols = width - 1
    # Reduced cost row: z_j - c_j with the current basis priced out.
    zrow = [-c for c in cost] + [Fraction(0)]
    for r in range(m):
        if cost[basis[r]] != 0:
            factor = cost[basis[r]]
            zrow = [z + factor * a for z, a in zip(zrow, tableau[r])]
    while True:
        entering = None
        for j in range(ncols):
            if zrow[j] > 0 and j not in basis:
                entering = j
                break
        if entering is None:
            return zrow[ncols]
        leaving = None
        best_ratio = None
        for r in range(m):
            a = tableau[r][entering]
            if a > 0:
                ratio = tableau[r][ncols] / a
                if best_ratio is None or ratio < best_ratio or (
                    ratio == best_ratio and basis[r] < basis[leaving]
                ):
                    best_ratio = ratio
                    leaving = r
        if leaving is None:
            raise Unbounded("no blocking row for the entering column")
        factor = zrow[entering]
        _pivot(tableau, basis, leaving, entering)
        zrow = [z - factor * a for z, a in zip(zrow, tableau[leaving])]


def solve_min(
    objective: Sequence[Fraction],
    constraints_ge: Sequence[Tuple[Sequence[Fraction], Fraction]],
) -> LpSolution:
    """Minimize objective . x subject to row . x >= rhs for each row, x >= 0."""
    n = len(objective)
    m = len(constraints_ge)
    obj = [Fraction(c) for c in objective]
    if m == 0:
        if any(c < 0 for c in obj):
            raise Unbounded("negative objective coefficient with no constraints")
        return LpSolution(Fraction(0), tuple(Fraction(0) for _ in range(n)))

    # Equality form: A x - s = b with surplus s >= 0; rows with b < 0 are
    # negated so the right-hand side is nonnegative, then artificials are
    # added wherever the surplus column cannot serve as the initial basis.
    rows: List[List[Fraction]] = []
    rhs: List[Fraction] = []
    for i, (coeffs, b) in enumerate(constraints_ge):
        if len(coeffs) != n:
            raise ValueError("constraint width mismatch")
        row = [Fraction(c) for c in coeffs] + [Fraction(0)] * m
        row[n + i] = Fraction(-1)
        b = Fraction(b)
        if b < 0:
            row = [-x for x in row]
            b = -b
        rows.append(row)
        rhs.append(b)

    needs_artificial = [i for i in range(m) if rows[i][n + i] < 0]
    total = n + m + len(needs_artificial)
    tableau: List[List[Fraction]] = []
    basis: List[int] = [0] * m
    art_col = n + m
    art_cols = []
    for i in range(m):
        row = rows[i] + [Fraction(0)] * len(needs_artificial) + [rhs[i]]
        if i in needs_artificial:
            col = art_col + needs_artificial.index(i)
            row[col] = Fraction(1)
            basis[i] = col
            art_cols.append(col)
        else:
            basis[i] = n + i
        tableau.append(row)

    if needs_artificial:
        phase1 = [Fraction(0)] * (n + m) + [Fraction(1)] * len(needs_artificial)
        value = _simplex(tableau, basis, phase1)
        if value != 0:
            raise Infeasible("artificial variables remain positive")
        # Drive any artificial still in the basis out of it.
        for r in range(m):
            if basis[r] >= art_col:
                pivot_col = next(
                    (j for j in range(n + m) if tableau[r][j] != 0), None
                )
                if pivot_col is not None:
                    _pivot(tableau, basis, r, pivot_col)
        for row in tableau:
            for col in art_cols:
                row[col] = Fraction(0)

    phase2 = obj + [Fraction(0)] * (total - n)
    value = _simplex(tableau, basis, phase2)
    assignment = [Fraction(0)] * n
    for r, col in enumerate(basis):
        if col < n:
            assignment[col] = tableau[r][-1]
    return LpSolution(value, tuple(assignment))
