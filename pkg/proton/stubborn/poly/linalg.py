"""
Exact linear algebra over rationals and tower elements.


Copyright (c) 2026 Proton AG

This file is part of Proton Stubborn Cert.

Proton Stubborn Cert is free software: you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation, either version 3 of the License, or
(at your option) any later version.

Proton Stubborn Cert is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with Proton Stubborn Cert.  If not, see <https://www.gnu.org/licenses/>.


Matrices are lists of rows. Entries may be ``Fraction`` or ``FieldElem``;
both support the field operations and comparisons used here.
"""
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

Matrix = List[list]


def _is_zero(value) -> bool:
    return value == 0


def copy_matrix(matrix: Sequence[Sequence]) -> Matrix:
    return [list(row) for row in matrix]


def transpose(matrix: Sequence[Sequence]) -> Matrix:
    return [list(column) for column in zip(*matrix)]


def mat_vec(matrix: Sequence[Sequence], vector: Sequence) -> list:
    result = []
    for row in matrix:
        total = Fraction(0)
        for a, b in zip(row, vector):
            if not _is_zero(a) and not _is_zero(b):
                total = total + a * b
        result.append(total)
    return result


def rref(matrix: Sequence[Sequence], ncols: Optional[int] = None) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form and pivot columns.

    ``ncols`` limits pivoting to the leading columns, which is how augmented
    systems are reduced."""
    rows = copy_matrix(matrix)
    if not rows:
        return rows, []
    ncols = len(rows[0]) if ncols is None else ncols
    pivots: List[int] = []
    rank = 0
    for column in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if not _is_zero(rows[r][column])), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inverse = 1 / rows[rank][column]
        rows[rank] = [value * inverse for value in rows[rank]]
        for r, row in enumerate(rows):
            if r != rank and not _is_zero(row[column]):
                factor = row[column]
                rows[r] = [a - factor * b for a, b in zip(row, rows[rank])]
        pivots.append(column)
        rank += 1
        if rank == len(rows):
            break
    return rows, pivots


def rank(matrix: Sequence[Sequence]) -> int:
    return len(rref(matrix)[1])


def nullspace(matrix: Sequence[Sequence], ncols: Optional[int] = None) -> List[list]:
    """Basis of the right kernel, one vector per free column."""
    if not matrix:
        return [[Fraction(int(i == j)) for j in range(ncols or 0)] for i in range(ncols or 0)]
    ncols = len(matrix[0])
    reduced, pivots = rref(matrix)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for column in free:
        vector = [Fraction(0)] * ncols
        vector[column] = Fraction(1)
        for row, pivot in enumerate(pivots):
            vector[pivot] = -reduced[row][column]
        basis.append(vector)
    return basis


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> Optional[list]:
    """One solution of M·v = rhs (free variables zero), or None if inconsistent."""
    if not matrix:
        return []
    ncols = len(matrix[0])
    augmented = [list(row) + [value] for row, value in zip(matrix, rhs)]
    reduced, pivots = rref(augmented, ncols)
    for row in reduced[len(pivots):]:
        if not _is_zero(row[ncols]):
            return None
    solution = [Fraction(0)] * ncols
    for row, pivot in enumerate(pivots):
        solution[pivot] = reduced[row][ncols]
    return solution


def rank_pair(matrix: Sequence[Sequence], rhs: Sequence) -> Tuple[int, int]:
    """Ranks of the coefficient matrix and of the augmented matrix."""
    augmented = [list(row) + [value] for row, value in zip(matrix, rhs)]
    return rank(matrix), rank(augmented)


def ldl(matrix: Sequence[Sequence]) -> Optional[Tuple[Matrix, list]]:
    """Exact LDLᵀ of a symmetric matrix, or None if it is not PSD.

    Zero pivots are accepted when the rest of their column is zero, so
    positive semidefinite matrices of any rank factor."""
    size = len(matrix)
    work = copy_matrix(matrix)
    lower = [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]
    diagonal = []
    for k in range(size):
        pivot = work[k][k]
        if pivot < 0:
            return None
        if _is_zero(pivot):
            if any(not _is_zero(work[i][k]) for i in range(k + 1, size)):
                return None
            diagonal.append(pivot)
            continue
        diagonal.append(pivot)
        inverse = 1 / pivot
        column = [(i, work[i][k] * inverse) for i in range(k + 1, size) if not _is_zero(work[i][k])]
        for i, factor in column:
            lower[i][k] = factor
        for i, factor in column:
            row = work[i]
            for j, other in column:
                if j <= i:
                    row[j] = row[j] - factor * pivot * other
                    if j != i:
                        work[j][i] = row[j]
    return lower, diagonal


def is_psd(matrix: Sequence[Sequence]) -> bool:
    return ldl(matrix) is not None


def symmetric_from_vector(values: Sequence, size: int) -> Matrix:
    """Rebuilds a symmetric matrix from its column-major vectorization."""
    return [[values[j * size + i] for j in range(size)] for i in range(size)]
