import logging
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from kronpow.choices import KronPathChoices, RecurrenceVariantChoices
from polycore.exceptions import DimensionError
from polycore.matrix import PolyMatrix
from polycore.polynomial import BiPoly

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KronMatrix:
    """
    The second-kind Kronecker power A^{n}: the `(n+1) x (n+1)` matrix of the action of a
    2x2 matrix on the degree-n homogeneous monomials `(t1^(n-j) t2^j)_j`.

    Attributes:
    - `n` (int): The power.
    - `body` (PolyMatrix): The matrix itself; `A^{0}` is the 1x1 identity.
    """

    n: int
    body: PolyMatrix

    def entry(self, i, j):
        return self.body.entry(i, j)

    def __eq__(self, other):
        if not isinstance(other, KronMatrix):
            return NotImplemented
        return self.n == other.n and self.body == other.body

    def __hash__(self):
        return hash((self.n, self.body))


def as_two_by_two(matrix):
    """
    Coerces nested lists to a `PolyMatrix` and checks the 2x2 shape.

    Raises:
    - `DimensionError`: If the matrix is not 2x2.
    """
    if not isinstance(matrix, PolyMatrix):
        matrix = PolyMatrix(matrix)
    if matrix.shape != (2, 2):
        raise DimensionError(
            f"Second-kind Kronecker powers need a 2x2 matrix, got {matrix.rows}x{matrix.cols}.",
            details={"shape": list(matrix.shape)},
        )
    return matrix


def _check_power(n):
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise ValueError(f"The Kronecker power must be a nonnegative integer, got {n!r}.")


def _powers(value, n):
    powers = [BiPoly.constant(1)]
    for _ in range(n):
        powers.append(powers[-1] * value)
    return powers


def kron_entry(matrix, n, i, j):
    """
    One entry of A^{n} from the explicit binomial formula.

    Only indices `k` with every exponent nonnegative are visited, so no negative power is formed:
    `max(0, j - i) <= k <= min(j, n - i)`.
    """
    matrix = as_two_by_two(matrix)
    _check_power(n)
    if not (0 <= i <= n and 0 <= j <= n):
        raise IndexError(f"Entry ({i}, {j}) is outside A^{{{n}}}.")
    a00, a01 = matrix.row_entries(0)
    a10, a11 = matrix.row_entries(1)
    return _explicit_entry(
        _powers(a00, n), _powers(a01, n), _powers(a10, n), _powers(a11, n), n, i, j
    )


def _explicit_entry(p00, p01, p10, p11, n, i, j):
    total = BiPoly.zero()
    for k in range(max(0, j - i), min(j, n - i) + 1):
        weight = comb(n - i, k) * comb(i, j - k)
        if not weight:
            continue
        total = total + (
            p00[n - i - k] * p01[k] * p10[i - j + k] * p11[j - k]
        ).scale(weight)
    return total


def kron_explicit(matrix, n):
    """
    Builds A^{n} entry by entry from the closed binomial formula.

    Args:
    - `matrix`: A 2x2 matrix of rationals or polynomials.
    - `n`: Nonnegative power.

    Returns:
    - `KronMatrix`.

    Raises:
    - `DimensionError`: If `matrix` is not 2x2.
    """
    matrix = as_two_by_two(matrix)
    _check_power(n)
    a00, a01 = matrix.row_entries(0)
    a10, a11 = matrix.row_entries(1)
    p00, p01, p10, p11 = (_powers(value, n) for value in (a00, a01, a10, a11))
    body = PolyMatrix(
        [
            [_explicit_entry(p00, p01, p10, p11, n, i, j) for j in range(n + 1)]
            for i in range(n + 1)
        ]
    )
    return KronMatrix(n, body)


def _recurrence_step(matrix, previous, n, variant):
    """A^{n} from A^{n-1} by the entrywise row recurrence; out-of-range entries count as zero."""
    a00, a01 = matrix.row_entries(0)
    a10, a11 = matrix.row_entries(1)
    zero = BiPoly.zero()

    def old(r, c):
        if 0 <= c <= n - 1:
            return previous.entry(r, c)
        return zero

    rows = []
    for i in range(n + 1):
        if variant == RecurrenceVariantChoices.FIRST:
            if i <= n - 1:
                source, left, right = i, a00, a01
            else:
                source, left, right = n - 1, a10, a11
        else:
            if i == 0:
                source, left, right = 0, a00, a01
            else:
                source, left, right = i - 1, a10, a11
        rows.append(
            [left * old(source, j) + right * old(source, j - 1) for j in range(n + 1)]
        )
    return PolyMatrix(rows)


def kron_recurrence(matrix, n, variant=RecurrenceVariantChoices.FIRST):
    """
    Builds A^{n} by iterating one of the two row recurrences from `A^{0} = (1)`.

    Args:
    - `matrix`: A 2x2 matrix.
    - `n`: Nonnegative power.
    - `variant`: `RecurrenceVariantChoices.FIRST` or `RecurrenceVariantChoices.SECOND`.

    Raises:
    - `DimensionError`: If `matrix` is not 2x2.
    - `ValueError`: For an unknown variant.
    """
    matrix = as_two_by_two(matrix)
    _check_power(n)
    if variant not in RecurrenceVariantChoices.values:
        raise ValueError(f"Unknown recurrence variant {variant!r}.")
    body = PolyMatrix.identity(1)
    for power in range(1, n + 1):
        body = _recurrence_step(matrix, body, power, variant)
    return KronMatrix(n, body)


def selector(n_minus_1, k):
    """
    The `n x (n+1)` selector matrices, `n = n_minus_1 + 1`.

    Returns:
    - `L^0 = [I_n | 0]` for `k = 0` and `L^1 = [0 | I_n]` for `k = 1`.
    """
    if k not in (0, 1):
        raise ValueError("The selector index must be 0 or 1.")
    if n_minus_1 < 0:
        raise ValueError("The selector size must be nonnegative.")
    size = n_minus_1 + 1
    return PolyMatrix(
        [[1 if column == row + k else 0 for column in range(size + 1)] for row in range(size)]
    )


def recurrence_multipliers(matrix, n, variant=RecurrenceVariantChoices.FIRST):
    """
    The `(n+1) x n` matrices `M0`, `M1` of the matrix form of a recurrence,
    `A^{n} = M0 A^{n-1} L^0 + M1 A^{n-1} L^1`.

    Raises:
    - `ValueError`: If `n < 1`.
    """
    matrix = as_two_by_two(matrix)
    if n < 1:
        raise ValueError("The matrix form of the recurrence needs n >= 1.")
    a00, a01 = matrix.row_entries(0)
    a10, a11 = matrix.row_entries(1)
    first = [[0] * n for _ in range(n + 1)]
    second = [[0] * n for _ in range(n + 1)]
    for i in range(n + 1):
        if variant == RecurrenceVariantChoices.FIRST:
            if i <= n - 1:
                first[i][i], second[i][i] = a00, a01
            else:
                first[i][n - 1], second[i][n - 1] = a10, a11
        else:
            if i == 0:
                first[0][0], second[0][0] = a00, a01
            else:
                first[i][i - 1], second[i][i - 1] = a10, a11
    return PolyMatrix(first), PolyMatrix(second)


@lru_cache(maxsize=512)
def _cached_power(matrix, n):
    if n == 0:
        return PolyMatrix.identity(1)
    previous = _cached_power(matrix, n - 1)
    return _recurrence_step(matrix, previous, n, RecurrenceVariantChoices.FIRST)


def kron_power(matrix, n):
    """
    Default construction path: the first recurrence, memoized per `(matrix, n)`.

    `lru_cache` is internally synchronized, so concurrent readers are safe.
    """
    matrix = as_two_by_two(matrix)
    _check_power(n)
    logger.debug("Kronecker power n=%s requested", n)
    return KronMatrix(n, _cached_power(matrix, n))


def kron_by_path(matrix, n, path=KronPathChoices.RECURRENCE_I):
    if path == KronPathChoices.EXPLICIT:
        return kron_explicit(matrix, n)
    if path == KronPathChoices.RECURRENCE_II:
        return kron_recurrence(matrix, n, RecurrenceVariantChoices.SECOND)
    return kron_power(matrix, n)
