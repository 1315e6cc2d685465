"""Distributional derivatives of moment functionals, evaluated through moments only."""
from fractions import Fraction

from diffcalc.operators import apply_D
from polycore.exceptions import ShapeError
from polycore.matrix import PolyMatrix
from polycore.polynomial import BiPoly


def dual_pairing(functional, blocks, poly, n):
    """
    `<div^{n}(B u), p> = (-1)^n sum_i <u, B_i D_i^n p>`.

    Args:
    - `functional`: A moment functional exposing `pair(matrix)`.
    - `blocks`: `n + 1` equally shaped polynomial matrices `B_0..B_n` (or one stacked matrix).
    - `poly`: The test polynomial `p`.
    - `n`: Order; `n = 0` is plain pairing `<u, B_0 p>`.

    Returns:
    - The rational matrix of shape `B_i`.

    Raises:
    - `MomentCapExceeded`: If a required moment lies beyond the functional's cap.
    """
    if isinstance(blocks, PolyMatrix):
        blocks = blocks.split_rows(n + 1)
    blocks = list(blocks)
    if len(blocks) != n + 1:
        raise ShapeError(f"Expected {n + 1} blocks, got {len(blocks)}.")
    poly = BiPoly.coerce(poly)
    total = None
    for i, block in enumerate(blocks):
        derivative = apply_D(i, n, poly)
        if derivative.is_zero():
            continue
        piece = block.scale(derivative)
        total = piece if total is None else total + piece
    if total is None:
        return [[Fraction(0)] * blocks[0].cols for _ in range(blocks[0].rows)]
    values = functional.pair(total)
    if n % 2:
        values = [[-value for value in row] for row in values]
    return values


def gradient_pairing(functional, stack, n):
    """
    `<∇^{n} u, (p_0, ..., p_n)^t> = (-1)^n sum_i <u, D_i^n p_i>`, term by term.

    Args:
    - `stack`: The `n + 1` polynomials `p_i`.
    """
    stack = [BiPoly.coerce(value) for value in stack]
    if len(stack) != n + 1:
        raise ShapeError(f"Expected {n + 1} polynomials, got {len(stack)}.")
    total = Fraction(0)
    for i, value in enumerate(stack):
        total += functional.pair_poly(apply_D(i, n, value))
    return -total if n % 2 else total

