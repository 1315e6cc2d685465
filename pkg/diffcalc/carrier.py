"""
Exact calculus for quantities `(P / prod f_i^{k_i}) * ω` where ω = exp(s) prod f_i^{e_i}.

ω itself is never evaluated: differentiation only needs its logarithmic derivatives,
`ω_x / ω = s_x + sum e_i (f_i)_x / f_i`, and every result stays in the same form.
"""
import logging
from dataclasses import dataclass
from math import comb

from polycore.choices import AxisChoices
from polycore.exceptions import ShapeError
from polycore.polynomial import BiPoly, as_rational, exact_divide, to_text

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WeightCarrier:
    """
    Factored symmetry factor `ω = exp(s) * prod f_i^{e_i}`.

    Attributes:
    - `s` (BiPoly): Exponential part.
    - `factors` (tuple): Pairs `(f_i, e_i)` with non-constant, pairwise distinct `f_i` and
      rational `e_i`.

    Usage:
        ```
        ball = WeightCarrier(factors=((1 - X * X - Y * Y, Fraction(1, 2)),))
        intriguing = WeightCarrier(s=Y**3 - X * Y)
        ```
    """

    s: BiPoly = BiPoly.zero()
    factors: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "s", BiPoly.coerce(self.s))
        cleaned = tuple(
            (BiPoly.coerce(base), as_rational(exponent)) for base, exponent in self.factors
        )
        seen = set()
        for base, _ in cleaned:
            if base.is_constant():
                raise ValueError(f"Weight factor {to_text(base)} must be non-constant.")
            if base in seen:
                raise ValueError(f"Weight factor {to_text(base)} is repeated.")
            seen.add(base)
        object.__setattr__(self, "factors", cleaned)

    @property
    def size(self):
        return len(self.factors)

    def exponents(self):
        return [exponent for _, exponent in self.factors]

    def is_polynomial(self):
        """True when ω is itself a polynomial (no exponential part, nonnegative integer exponents)."""
        return self.s.is_zero() and all(
            exponent.denominator == 1 and exponent >= 0 for exponent in self.exponents()
        )

    def as_polynomial(self):
        if not self.is_polynomial():
            raise ValueError("This symmetry factor is not a polynomial.")
        result = BiPoly.constant(1)
        for base, exponent in self.factors:
            result = result * base ** int(exponent)
        return result

    def denominator(self, exponents):
        result = BiPoly.constant(1)
        for (base, _), power in zip(self.factors, exponents):
            if power:
                result = result * base**power
        return result

    def unit(self):
        """The term representing ω itself."""
        return CarrierTerm(BiPoly.constant(1), (0,) * self.size)

    def term(self, numerator):
        return CarrierTerm(BiPoly.coerce(numerator), (0,) * self.size)

    def perturbed(self, index, delta):
        """Copy with the exponent of factor `index` shifted by `delta` (negative controls)."""
        factors = list(self.factors)
        base, exponent = factors[index]
        factors[index] = (base, exponent + as_rational(delta))
        return WeightCarrier(self.s, tuple(factors))


@dataclass(frozen=True)
class CarrierTerm:
    """
    The quantity `(numerator / prod f_i^{k_i}) * ω`.

    Attributes:
    - `numerator` (BiPoly)
    - `exponents` (tuple[int]): Denominator exponents `k_i`, one per weight factor.
    """

    numerator: BiPoly
    exponents: tuple

    def is_zero(self):
        return self.numerator.is_zero()

    def raised_to(self, exponents, weight):
        """Same quantity written over the larger denominator `prod f_i^{exponents_i}`."""
        extra = [target - own for target, own in zip(exponents, self.exponents)]
        if any(power < 0 for power in extra):
            raise ValueError("Cannot lower denominator exponents.")
        return CarrierTerm(self.numerator * weight.denominator(extra), tuple(exponents))

    def add(self, other, weight):
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        common = tuple(max(a, b) for a, b in zip(self.exponents, other.exponents))
        left = self.raised_to(common, weight)
        right = other.raised_to(common, weight)
        return CarrierTerm(left.numerator + right.numerator, common)

    def times(self, poly):
        return CarrierTerm(self.numerator * BiPoly.coerce(poly), self.exponents)

    def scale(self, factor):
        return CarrierTerm(self.numerator.scale(factor), self.exponents)

    def to_polynomial(self, weight):
        """
        The polynomial `Q` with `term = Q * ω`, by exact division.

        Raises:
        - `NotDivisible`: If the numerator is not a multiple of `prod f_i^{k_i}`.
        """
        if self.is_zero():
            return BiPoly.zero()
        return exact_divide(self.numerator, weight.denominator(self.exponents))


def carrier_derivative(term, weight, axis):
    """
    Exact partial derivative of a carrier term.

    `d(P / prod f^k * ω) = ω / prod f^k * [dP + P ds + sum_i (e_i - k_i) P df_i / f_i]`;
    `k_i` grows by one only where `(e_i - k_i) != 0` and `df_i != 0`.

    Args:
    - `term`: The `CarrierTerm` to differentiate.
    - `weight`: The `WeightCarrier` it lives over.
    - `axis`: `AxisChoices.X` or `AxisChoices.Y`.

    Returns:
    - A `CarrierTerm`.
    """
    if term.is_zero():
        return CarrierTerm(BiPoly.zero(), (0,) * weight.size)
    numerator = term.numerator
    bumped = []
    for index, ((base, exponent), power) in enumerate(zip(weight.factors, term.exponents)):
        coefficient = exponent - power
        derivative = base.partial(axis)
        if coefficient and not derivative.is_zero():
            bumped.append((index, coefficient, derivative))
    main = numerator.partial(axis) + numerator * weight.s.partial(axis)
    for index, _, _ in bumped:
        main = main * weight.factors[index][0]
    result = main
    for index, coefficient, derivative in bumped:
        piece = numerator * derivative
        for other, _, _ in bumped:
            if other != index:
                piece = piece * weight.factors[other][0]
        result = result + piece.scale(coefficient)
    exponents = list(term.exponents)
    for index, _, _ in bumped:
        exponents[index] += 1
    return CarrierTerm(result, tuple(exponents))


def carrier_D(i, n, term, weight):
    """`D_i^n` on a carrier term: `binom(n, i)` times `n - i` x-derivatives then `i` y-derivatives."""
    for _ in range(n - i):
        term = carrier_derivative(term, weight, AxisChoices.X)
    for _ in range(i):
        term = carrier_derivative(term, weight, AxisChoices.Y)
    return term.scale(comb(n, i))


def carrier_matrix(matrix, weight):
    """Lifts a `PolyMatrix` `A` to the carrier matrix representing `A * ω`."""
    return [[weight.term(value) for value in row] for row in matrix.entries()]


def carrier_div_n(blocks, weight, n):
    """
    `sum_i D_i^n B_i` computed entirely in carrier calculus.

    Args:
    - `blocks`: `n + 1` carrier matrices (lists of rows of `CarrierTerm`) of equal shape.
    - `weight`: The `WeightCarrier`.
    - `n`: Order; with `n = 0` the single block is returned unchanged.

    Raises:
    - `ShapeError`: If the block count or shapes disagree.
    """
    blocks = list(blocks)
    if len(blocks) != n + 1:
        raise ShapeError(f"div^{{{n}}} needs {n + 1} blocks, got {len(blocks)}.")
    shape = (len(blocks[0]), len(blocks[0][0]))
    if any((len(block), len(block[0])) != shape for block in blocks):
        raise ShapeError("All carrier blocks must share their shape.")
    if n == 0:
        return [list(row) for row in blocks[0]]
    zero = CarrierTerm(BiPoly.zero(), (0,) * weight.size)
    result = [[zero] * shape[1] for _ in range(shape[0])]
    for i, block in enumerate(blocks):
        for r in range(shape[0]):
            for c in range(shape[1]):
                if block[r][c].is_zero():
                    continue
                result[r][c] = result[r][c].add(carrier_D(i, n, block[r][c], weight), weight)
    logger.debug("Carrier divergence of order %s over %s factor(s) done", n, weight.size)
    return result
