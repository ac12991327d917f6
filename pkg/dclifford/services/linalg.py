"""Exact rational linear algebra on lists of rows.

Elimination is sympy's reduced row echelon form, which pivots on the first
nonzero entry in row order and therefore gives canonical, reproducible bases.
"""
from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from sympy import Matrix, Rational as SympyRational

from dclifford.core.logging import get_logger

logger = get_logger(__name__)

Rows = Sequence[Sequence[Fraction]]


def _to_sympy(rows: Rows, ncols: int) -> Matrix:
    flat = [SympyRational(v.numerator, v.denominator) for row in rows for v in row]
    return Matrix(len(rows), ncols, flat)


def _to_fraction(value) -> Fraction:
    return Fraction(int(value.p), int(value.q))


def rref(rows: Rows, ncols: int) -> Tuple[List[List[Fraction]], Tuple[int, ...]]:
    """Reduced row echelon form and pivot columns."""
    if not rows or not ncols:
        return [list(row) for row in rows], ()
    reduced, pivots = _to_sympy(rows, ncols).rref()
    out = [[_to_fraction(reduced[i, j]) for j in range(ncols)] for i in range(reduced.rows)]
    return out, tuple(pivots)


def rank(rows: Rows, ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows: Rows, ncols: int) -> List[List[Fraction]]:
    """Canonical nullspace basis: reduced echelon rows with unit leading entries."""
    if ncols == 0:
        return []
    reduced, pivots = rref(rows, ncols)
    free = [j for j in range(ncols) if j not in pivots]
    raw = []
    for f in free:
        vector = [Fraction(0)] * ncols
        vector[f] = Fraction(1)
        for row_index, pivot in enumerate(pivots):
            vector[pivot] = -reduced[row_index][f]
        raw.append(vector)
    if not raw:
        return []
    canonical, canonical_pivots = rref(raw, ncols)
    logger.debug(f"nullspace of {len(rows)}x{ncols} matrix has dimension {len(canonical_pivots)}")
    return canonical[:len(canonical_pivots)]


def solve(rows: Rows, ncols: int, rhs: Sequence[Fraction]) -> Optional[List[Fraction]]:
    """One exact solution of ``rows x = rhs`` (free variables zero), or None."""
    if len(rhs) != len(rows):
        raise ValueError("right-hand side length does not match the row count")
    if not rows:
        return [Fraction(0)] * ncols
    if ncols == 0:
        return [] if all(v == 0 for v in rhs) else None
    augmented = [list(row) + [value] for row, value in zip(rows, rhs)]
    reduced, pivots = rref(augmented, ncols + 1)
    if ncols in pivots:
        return None
    solution = [Fraction(0)] * ncols
    for row_index, pivot in enumerate(pivots):
        solution[pivot] = reduced[row_index][ncols]
    return solution


def matmul_vector(rows: Rows, vector: Sequence[Fraction]) -> List[Fraction]:
    return [sum((a * b for a, b in zip(row, vector)), Fraction(0)) for row in rows]


def transpose(rows: Rows, ncols: int) -> List[List[Fraction]]:
    return [[row[j] for row in rows] for j in range(ncols)]
