import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from django.conf import settings

from diffcalc.duality import dual_pairing
from kronpow.kronecker import kron_power
from moments.quasi_definite import full_moment_matrix
from pearson.families import as_form
from pearson.operators import apply_L
from polycore.exceptions import ConstructionUnavailable, NonzeroResidual, Unsolvable
from polycore.linalg import (
    determinant,
    is_diagonal,
    is_scalar,
    max_abs_numerator,
    rank_over_rationals,
    solve_linear_system,
    transpose,
)
from polycore.matrix import PolyMatrix, monomial_vector
from polycore.polynomial import (
    BiPoly,
    coefficient_vector,
    monomials_of_degree,
    monomials_up_to,
    to_text,
)
from rodrigues.choices import LambdaShapeChoices

logger = logging.getLogger(__name__)


@dataclass
class OrthogonalityTable:
    """`max |numerator|` of `<u, Q_n X_m^t>` per `m`; `holds` when every entry is zero."""

    n: int
    entries: dict = field(default_factory=dict)

    @property
    def holds(self):
        return all(value == 0 for value in self.entries.values())


def verify_orthogonality(functional, vector, up_to=None):
    """
    Tabulates `<u, Q_n X_m^t>` for `m = 0..up_to` (default `n - 1`).

    Raises:
    - `MomentCapExceeded`: When `n + up_to` exceeds the cap.
    """
    n = vector.n
    up_to = n - 1 if up_to is None else up_to
    column = vector.column()
    table = OrthogonalityTable(n)
    for m in range(up_to + 1):
        values = functional.pair(column @ monomial_vector(m).T)
        table.entries[m] = max_abs_numerator(values)
    if not table.holds:
        logger.warning("Q_%s fails orthogonality: %s", n, table.entries)
    return table


@dataclass
class GramResult:
    matrix: list
    nonsingular: bool
    diagonal: bool


def gram(functional, vector):
    """`H_n = <u, Q_n Q_n^t>`, with nonsingularity and diagonality flags."""
    column = vector.column()
    matrix = functional.pair(column @ column.T)
    return GramResult(matrix, determinant(matrix) != 0, is_diagonal(matrix))


def leading_matrix(vector):
    """Row `i` holds the coefficients of `x^(n-j) y^j` in `Q_{n-i,i}`."""
    n = vector.n
    return [
        [entry.coefficient(h, k) for h, k in monomials_of_degree(n)] for entry in vector.entries
    ]


def ps_check(vector):
    """The leading-coefficient matrix of `Q_n` is nonsingular."""
    return rank_over_rationals(leading_matrix(vector)) == vector.n + 1


def exact_degree_check(vector):
    return all(entry.is_zero() or entry.total_degree == vector.n for entry in vector.entries)


def classify_lambda(matrix):
    if is_scalar(matrix):
        return LambdaShapeChoices.SCALAR
    if is_diagonal(matrix):
        return LambdaShapeChoices.DIAGONAL
    return LambdaShapeChoices.GENERAL


@dataclass
class LambdaResult:
    matrix: list
    shape: str
    nonsingular: bool


def solve_lambda(family, vector):
    """
    Solves `L[Q_n^t] = Q_n^t Λ_n` for the constant matrix Λ_n over the full P_n basis, with `L`
    taken from the family's original form.

    Raises:
    - `Unsolvable`: If the leading matrix of `Q_n` is singular.
    - `NonzeroResidual`: If no constant Λ_n makes the residual vanish.
    """
    n = vector.n
    if not ps_check(vector):
        raise Unsolvable(
            f"The leading matrix of Q_{n} is singular; Λ_{n} is not determined.",
            details={"degree": n},
        )
    columns = [coefficient_vector(entry, n) for entry in vector.entries]
    images = [coefficient_vector(apply_L(family, entry), n) for entry in vector.entries]
    solution = solve_linear_system(transpose(columns), transpose(images))
    if not solution.consistent:
        logger.error("L[Q_%s] leaves Q_%s's span", n, n)
        raise NonzeroResidual(
            f"L[Q_{n}^t] - Q_{n}^t Λ_{n} cannot vanish for any constant Λ_{n}.",
            details={
                "degree": n,
                "images": [to_text(apply_L(family, entry)) for entry in vector.entries],
            },
        )
    matrix = solution.solution
    return LambdaResult(matrix, classify_lambda(matrix), determinant(matrix) != 0)


@dataclass
class Cor2Result:
    """`<u, Q_n X_n^t>` against `(-1)^n n! <u, (Φ^{n})^t>`."""

    holds: bool
    lhs: list
    rhs: list
    phi_pairing_nonsingular: bool


def cor2_check(functional, form, vector):
    n = vector.n
    lhs = functional.pair(vector.column() @ monomial_vector(n).T)
    phi_pairing = functional.pair(kron_power(as_form(form).phi, n).body)
    factor = factorial(n) * (-1 if n % 2 else 1)
    rhs = [[factor * value for value in row] for row in transpose(phi_pairing)]
    return Cor2Result(lhs == rhs, lhs, rhs, determinant(phi_pairing) != 0)


@dataclass
class DistributionalResult:
    holds: bool
    checked_degree: int
    failures: list = field(default_factory=list)


def distributional_identity_check(functional, form, vector, window=None):
    """
    Tests `Q_n^t u = div^{n}(Φ^{n} u)` on every monomial `m` up to degree
    `min(n + window, cap - n)`: `<u, Q_{n,j} m> = (-1)^n sum_i <u, Φ^{n}_{ij} D_i^n m>`.

    Args:
    - `window`: Extra degrees beyond `n`; defaults to `BIVARIATE["DISTRIBUTIONAL_WINDOW"]`.
    """
    n = vector.n
    if window is None:
        window = settings.BIVARIATE["DISTRIBUTIONAL_WINDOW"]
    top = min(n + window, functional.cap - n)
    power = kron_power(as_form(form).phi, n).body
    blocks = [power.row_block(i, 1) for i in range(n + 1)]
    failures = []
    for h, k in monomials_up_to(top):
        monomial = BiPoly.monomial(h, k)
        left = [functional.pair_poly(entry * monomial) for entry in vector.entries]
        right = dual_pairing(functional, blocks, monomial, n)[0]
        if left != right:
            failures.append((h, k))
    return DistributionalResult(not failures, top, failures)


def gram_schmidt_wops(functional, n):
    """
    The monic basis `P_n = X_n + (lower terms)` orthogonal to P_{n-1}, from the moment matrix.

    Raises:
    - `ConstructionUnavailable`: If `M_{n-1}` is singular.
    - `MomentCapExceeded`: If the cap is below `2n - 1`.
    """
    if n == 0:
        return [BiPoly.constant(1)]
    basis = monomials_up_to(n - 1)
    matrix = full_moment_matrix(functional, n - 1)
    leading = monomials_of_degree(n)
    rhs = [
        [-functional.moment(h + p, k + q) for p, q in leading] for h, k in basis
    ]
    solution = solve_linear_system(matrix, rhs)
    if not solution.unique:
        raise ConstructionUnavailable(
            f"M_{n - 1} is singular; no monic orthogonal basis of degree {n}.",
            details={"degree": n},
        )
    result = []
    for j, (p, q) in enumerate(leading):
        terms = {monomial: solution.solution[index][j] for index, monomial in enumerate(basis)}
        terms[(p, q)] = Fraction(1)
        result.append(BiPoly(terms))
    return result


@dataclass
class ChangeOfBasis:
    """
    `Q_n = C P_n` against the monic basis.

    Attributes:
    - `scale_factors`: The per-entry factors `C_ii` when `C` is diagonal, else None.
    """

    matrix: list
    nonsingular: bool
    exact: bool
    scale_factors: list = None


def change_of_basis(functional, vector):
    monic = gram_schmidt_wops(functional, vector.n)
    matrix = leading_matrix(vector)
    combined = PolyMatrix(matrix) @ PolyMatrix.column(monic)
    exact = combined.column_entries(0) == tuple(vector.entries)
    scale_factors = [matrix[i][i] for i in range(len(matrix))] if is_diagonal(matrix) else None
    return ChangeOfBasis(matrix, determinant(matrix) != 0, exact, scale_factors)
