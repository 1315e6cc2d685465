import logging
from dataclasses import dataclass
from typing import Optional

from kronpow.kronecker import as_two_by_two
from polycore.choices import AxisChoices
from polycore.linalg import solve_linear_system
from polycore.matrix import PolyMatrix
from polycore.polynomial import BiPoly, grlex_key

logger = logging.getLogger(__name__)

_LINEAR_BASIS = ((0, 0), (1, 0), (0, 1))


@dataclass(frozen=True)
class CondRSolution:
    """
    Result of solving condition (R):
    `(a Φ)_x + (b Φ)_y = Φ Ψ_0` and `(b Φ)_x + (c Φ)_y = Φ Ψ_1` with `deg Ψ_k <= 1`.

    Attributes:
    - `solvable` (bool): False is the "no solution" outcome.
    - `psi0`, `psi1` (PolyMatrix | None)
    - `free_unknowns` (int): Dimension of the solution set; free unknowns are set to zero.
    """

    solvable: bool
    psi0: Optional[PolyMatrix] = None
    psi1: Optional[PolyMatrix] = None
    free_unknowns: int = 0

    def __bool__(self):
        return self.solvable

    def psi(self, k):
        return self.psi0 if k == 0 else self.psi1


NO_SOLUTION = CondRSolution(solvable=False)


def _unknowns():
    """Unknown `(m, col, monomial)`: coefficient of `monomial` in entry `(m, col)` of Ψ_k."""
    return [(m, col, mono) for m in range(2) for col in range(2) for mono in _LINEAR_BASIS]


def _solve_for(phi, left):
    unknowns = _unknowns()
    rows = {}
    for index, (m, col, mono) in enumerate(unknowns):
        basis = BiPoly.monomial(*mono)
        for r in range(2):
            contribution = phi.entry(r, m) * basis
            for key, value in contribution.terms.items():
                rows.setdefault((r, col, key), [0] * len(unknowns))[index] += value
    for r in range(2):
        for col in range(2):
            for key in left.entry(r, col).terms:
                rows.setdefault((r, col, key), [0] * len(unknowns))
    equations = sorted(rows, key=lambda item: (item[0], item[1], grlex_key(item[2])))
    matrix = [rows[equation] for equation in equations]
    rhs = [[left.entry(r, col).coefficient(*key)] for r, col, key in equations]
    solution = solve_linear_system(matrix, rhs)
    if not solution.consistent:
        return None, 0
    entries = [[BiPoly.zero(), BiPoly.zero()] for _ in range(2)]
    for index, (m, col, mono) in enumerate(unknowns):
        value = solution.solution[index][0]
        if value:
            entries[m][col] = entries[m][col] + BiPoly.monomial(*mono, value)
    return PolyMatrix(entries), len(solution.free_columns)


def condition_left_side(phi, k, power=None):
    """`(a_{k,0} A)_x + (a_{k,1} A)_y` with `A = Φ` or a given power of Φ."""
    phi = as_two_by_two(phi)
    target = phi if power is None else power
    first, second = phi.row_entries(k)
    return target.scale(first).partial(AxisChoices.X) + target.scale(second).partial(AxisChoices.Y)


def solve_condR(phi):
    """
    Solves condition (R) for Ψ_0, Ψ_1 by coefficient matching over the monomial basis.

    Each Ψ_k entry is parameterized as `c0 + c1 x + c2 y`; one exact system per `k`. When the
    system is underdetermined the basic solution (free unknowns zero) is returned.

    Returns:
    - `CondRSolution`; `NO_SOLUTION` when either system is inconsistent.
    """
    phi = as_two_by_two(phi)
    results = []
    free = 0
    for k in range(2):
        psi, unknown_count = _solve_for(phi, condition_left_side(phi, k))
        if psi is None:
            logger.debug("Condition (R) has no solution for k=%s", k)
            return NO_SOLUTION
        results.append(psi)
        free += unknown_count
    return CondRSolution(True, results[0], results[1], free)


def psi_kn(psi0, psi1, phi, n, k):
    """
    The tridiagonal `(n+1) x (n+1)` matrix Ψ_k^n with
    `(a_{k,0} Φ^{n})_x + (a_{k,1} Φ^{n})_y = Φ^{n} Ψ_k^n`.

    Entries:
    - `(j-1, j)`: `(n + 1 - j) ψ^k_{01}`
    - `(j, j)`: `(n - j) ψ^k_{00} + j ψ^k_{11} - (n - 1)[(a_{k,0})_x + (a_{k,1})_y]`
    - `(j+1, j)`: `(j + 1) ψ^k_{10}`

    Args:
    - `psi0`, `psi1`: The solution of condition (R).
    - `phi`: Φ.
    - `n`: Nonnegative order; `Ψ_k^1 = Ψ_k`.
    - `k`: 0 or 1.
    """
    phi = as_two_by_two(phi)
    if n < 0:
        raise ValueError("psi_kn needs a nonnegative order.")
    psi = psi0 if k == 0 else psi1
    first, second = phi.row_entries(k)
    trace = first.partial(AxisChoices.X) + second.partial(AxisChoices.Y)
    size = n + 1
    entries = [[BiPoly.zero()] * size for _ in range(size)]
    for j in range(size):
        entries[j][j] = (
            psi.entry(0, 0).scale(n - j)
            + psi.entry(1, 1).scale(j)
            - trace.scale(n - 1)
        )
        if j >= 1:
            entries[j - 1][j] = psi.entry(0, 1).scale(n + 1 - j)
        if j + 1 < size:
            entries[j + 1][j] = psi.entry(1, 0).scale(j + 1)
    return PolyMatrix(entries)
