"""Exact linear algebra over the rationals: rank, determinant, solving and small helpers."""
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from polycore.exceptions import DimensionError


def _copy(matrix):
    return [[Fraction(value) for value in row] for row in matrix]


def _integer_rows(matrix):
    rows = []
    for row in matrix:
        row = [Fraction(value) for value in row]
        scale = lcm(*(value.denominator for value in row)) if row else 1
        rows.append([int(value * scale) for value in row])
    return rows


def rank_over_rationals(matrix):
    """
    Exact rank by fraction-free (Bareiss) elimination.

    Rows are first cleared of denominators (scaling a row does not change the rank), after
    which every intermediate stays an integer and no pivot threshold is ever needed.

    Args:
    - `matrix`: Nested sequence of exact rationals (possibly empty).

    Returns:
    - The rank as a nonnegative integer.
    """
    rows = _integer_rows(matrix)
    if not rows or not rows[0]:
        return 0
    n_rows, n_cols = len(rows), len(rows[0])
    rank = 0
    previous = 1
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pivot_value = rows[rank][col]
        for r in range(rank + 1, n_rows):
            factor = rows[r][col]
            rows[r] = [
                (pivot_value * rows[r][c] - factor * rows[rank][c]) // previous
                for c in range(n_cols)
            ]
        previous = pivot_value
        rank += 1
        if rank == n_rows:
            break
    return rank


def determinant(matrix):
    """
    Exact determinant of a square rational matrix (Bareiss on denominator-cleared rows).

    Raises:
    - `DimensionError`: If the matrix is not square.
    """
    matrix = [list(row) for row in matrix]
    size = len(matrix)
    if size == 0:
        return Fraction(1)
    if any(len(row) != size for row in matrix):
        raise DimensionError("The determinant needs a square matrix.")
    scale = Fraction(1)
    rows = []
    for row in matrix:
        row = [Fraction(value) for value in row]
        common = lcm(*(value.denominator for value in row))
        scale *= common
        rows.append([int(value * common) for value in row])
    sign = 1
    previous = 1
    for k in range(size - 1):
        if rows[k][k] == 0:
            swap = next((r for r in range(k + 1, size) if rows[r][k] != 0), None)
            if swap is None:
                return Fraction(0)
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                rows[i][j] = (rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j]) // previous
        previous = rows[k][k]
    return Fraction(sign * rows[-1][-1]) / scale


@dataclass
class LinearSystemSolution:
    """
    Outcome of an exact solve of `M X = B`.

    Attributes:
    - `consistent` (bool): Whether every right-hand side column admits a solution.
    - `solution` (list | None): A particular solution (free unknowns set to zero) with one
      row per unknown and one column per right-hand side, or `None` when inconsistent.
    - `rank` (int): Rank of `M`.
    - `pivot_columns` / `free_columns` (list[int]): Unknowns that are pinned down or free.
    """

    consistent: bool
    solution: list
    rank: int
    pivot_columns: list = field(default_factory=list)
    free_columns: list = field(default_factory=list)

    @property
    def unique(self):
        return self.consistent and not self.free_columns


def solve_linear_system(matrix, rhs):
    """
    Solves `M X = B` exactly by Gauss-Jordan elimination over `Fraction`.

    Args:
    - `matrix`: `m x n` rational matrix.
    - `rhs`: `m x r` rational matrix (one column per right-hand side).

    Returns:
    - `LinearSystemSolution`.
    """
    m_rows = _copy(matrix)
    b_rows = _copy(rhs)
    if len(m_rows) != len(b_rows):
        raise DimensionError("Matrix and right-hand side must have the same number of rows.")
    n_rows = len(m_rows)
    n_cols = len(m_rows[0]) if m_rows else 0
    n_rhs = len(b_rows[0]) if b_rows else 0
    pivots = []
    row = 0
    for col in range(n_cols):
        pivot = next((r for r in range(row, n_rows) if m_rows[r][col] != 0), None)
        if pivot is None:
            continue
        m_rows[row], m_rows[pivot] = m_rows[pivot], m_rows[row]
        b_rows[row], b_rows[pivot] = b_rows[pivot], b_rows[row]
        inverse = 1 / m_rows[row][col]
        m_rows[row] = [value * inverse for value in m_rows[row]]
        b_rows[row] = [value * inverse for value in b_rows[row]]
        for r in range(n_rows):
            if r != row and m_rows[r][col] != 0:
                factor = m_rows[r][col]
                m_rows[r] = [a - factor * b for a, b in zip(m_rows[r], m_rows[row])]
                b_rows[r] = [a - factor * b for a, b in zip(b_rows[r], b_rows[row])]
        pivots.append(col)
        row += 1
        if row == n_rows:
            break
    rank = len(pivots)
    free = [col for col in range(n_cols) if col not in pivots]
    consistent = all(value == 0 for r in range(rank, n_rows) for value in b_rows[r])
    if not consistent:
        return LinearSystemSolution(False, None, rank, pivots, free)
    solution = [[Fraction(0)] * n_rhs for _ in range(n_cols)]
    for r, col in enumerate(pivots):
        solution[col] = list(b_rows[r])
    return LinearSystemSolution(True, solution, rank, pivots, free)


def transpose(matrix):
    return [list(column) for column in zip(*matrix)]


def matmul(left, right):
    if left and right and len(left[0]) != len(right):
        raise DimensionError("Inner dimensions do not agree.")
    columns = transpose(right)
    return [
        [sum((a * b for a, b in zip(row, column)), Fraction(0)) for column in columns]
        for row in left
    ]


def is_diagonal(matrix):
    return all(value == 0 for i, row in enumerate(matrix) for j, value in enumerate(row) if i != j)


def is_scalar(matrix):
    if not is_diagonal(matrix):
        return False
    diagonal = [matrix[i][i] for i in range(len(matrix))]
    return all(value == diagonal[0] for value in diagonal)


def max_abs_numerator(matrix):
    """Largest `|numerator|` over the entries; zero exactly when the matrix vanishes."""
    return max((abs(Fraction(value).numerator) for row in matrix for value in row), default=0)
