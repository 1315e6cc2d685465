from math import comb

from polycore.choices import AxisChoices
from polycore.exceptions import ShapeError
from polycore.matrix import PolyMatrix
from polycore.polynomial import BiPoly


def _check_index(i, n):
    if n < 0:
        raise ValueError("The operator order must be nonnegative.")
    if not 0 <= i <= n:
        raise IndexError(f"D_i^n needs 0 <= i <= n, got i={i}, n={n}.")


def apply_D(i, n, value):
    """
    The operator `D_i^n = binom(n, i) d_x^(n-i) d_y^i`, applied entrywise.

    Args:
    - `i`: Index with `0 <= i <= n`.
    - `n`: Order.
    - `value`: A `BiPoly` or a `PolyMatrix`.

    Raises:
    - `IndexError`: If `i` is outside `0..n`.
    """
    _check_index(i, n)
    weight = comb(n, i)

    def operate(poly):
        return poly.partial(AxisChoices.X, n - i).partial(AxisChoices.Y, i).scale(weight)

    if isinstance(value, PolyMatrix):
        return value.map(operate)
    return operate(BiPoly.coerce(value))


def nabla_n(matrix, n):
    """
    `∇^{n} A = (D_0^n A, D_1^n A, ..., D_n^n A)^t` as a stacked `((n+1)h) x k` matrix.

    `∇^{0} A = A`.
    """
    if not isinstance(matrix, PolyMatrix):
        matrix = PolyMatrix([[matrix]])
    if n == 0:
        return matrix
    return PolyMatrix.stack(apply_D(i, n, matrix) for i in range(n + 1))


def div_n(blocks, n):
    """
    `div^{n}(B_0, ..., B_n)^t = sum_i D_i^n B_i`.

    Args:
    - `blocks`: Either a stacked `PolyMatrix` with `n+1` equal row blocks or a list of `n+1`
      equally shaped matrices.
    - `n`: Order; `div^{0}` is the identity.

    Raises:
    - `ShapeError`: If the block count is not `n + 1` or the shapes disagree.
    """
    if isinstance(blocks, PolyMatrix):
        parts = blocks.split_rows(n + 1)
    else:
        parts = list(blocks)
        if len(parts) != n + 1:
            raise ShapeError(
                f"div^{{{n}}} needs {n + 1} blocks, got {len(parts)}.",
                details={"expected": n + 1, "received": len(parts)},
            )
        if any(part.shape != parts[0].shape for part in parts):
            raise ShapeError("All blocks of a divergence must share their shape.")
    result = apply_D(0, n, parts[0])
    for i in range(1, n + 1):
        result = result + apply_D(i, n, parts[i])
    return result
