from dataclasses import dataclass, field
from typing import Optional

from diffcalc.carrier import WeightCarrier
from pearson.choices import ConstructionFormChoices
from pearson.validators import FamilyValidator
from polycore.choices import AxisChoices
from polycore.exceptions import ConstructionUnavailable
from polycore.matrix import PolyMatrix
from polycore.polynomial import BiPoly


@dataclass(frozen=True)
class FamilyForm:
    """
    One (Φ, Ψ, ω) triple of the second-order operator
    `L[p] = a p_xx + 2b p_xy + c p_yy + d p_x + e p_y`.

    Attributes:
    - `phi` (PolyMatrix): Symmetric 2x2 matrix `(a b; b c)` of degree at most 2.
    - `psi` (PolyMatrix): Column `(d; e)` of degree at most 1.
    - `weight` (WeightCarrier | None): Factored symmetry factor, `None` when ω has no carrier
      form and only the weight-free routes apply.

    Raises:
    - `ValidationError`: On construction, for wrong shapes, a non-symmetric Φ or degrees above
      the bounds.
    """

    phi: PolyMatrix
    psi: PolyMatrix
    weight: Optional[WeightCarrier] = None

    def __post_init__(self):
        phi = self.phi if isinstance(self.phi, PolyMatrix) else PolyMatrix(self.phi)
        psi = self.psi if isinstance(self.psi, PolyMatrix) else PolyMatrix.column(self.psi)
        FamilyValidator.validate_shapes(phi, psi)
        FamilyValidator.validate_phi_symmetric(phi)
        FamilyValidator.validate_degree_bounds(phi, psi)
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "psi", psi)

    @property
    def a(self):
        return self.phi.entry(0, 0)

    @property
    def b(self):
        return self.phi.entry(0, 1)

    @property
    def c(self):
        return self.phi.entry(1, 1)

    @property
    def d(self):
        return self.psi.entry(0, 0)

    @property
    def e(self):
        return self.psi.entry(1, 0)

    def coefficient_rows(self):
        """`((a_00, a_01), (a_10, a_11)) = ((a, b), (b, c))`, the rows of Φ."""
        return ((self.a, self.b), (self.b, self.c))

    @property
    def tilde_psi(self):
        """`Ψ̃ = Ψ - (div Φ)^t = (d - a_x - b_y; e - b_x - c_y)`."""
        x, y = AxisChoices.X, AxisChoices.Y
        return PolyMatrix.column(
            [
                self.d - self.a.partial(x) - self.b.partial(y),
                self.e - self.b.partial(x) - self.c.partial(y),
            ]
        )

    @property
    def is_diagonal(self):
        return self.b.is_zero()


@dataclass(frozen=True)
class SuetinSplitting:
    """Splittings `a = a1 a2`, `c = c1 c2` supplied as data for the diagonal reduction."""

    a1: BiPoly
    c1: BiPoly

    def __post_init__(self):
        object.__setattr__(self, "a1", BiPoly.coerce(self.a1))
        object.__setattr__(self, "c1", BiPoly.coerce(self.c1))


@dataclass(frozen=True)
class FamilySpec:
    """
    A family of the catalog or of a user document.

    Attributes:
    - `name` (str)
    - `phi`, `psi`, `weight`: The original form (see `FamilyForm`).
    - `params` (tuple): `(name, Fraction)` pairs; `parameters` gives them as a dict.
    - `diagonal_reduction` (FamilyForm | None): Optional equivalent diagonal form.
    - `splitting` (SuetinSplitting | None): Optional data for the diagonal reduction.
    - `description` (str)

    Usage:
        ```
        family = FamilySpec("intriguing", phi=[[3 * Y, 1], [1, 0]], psi=[-X, -Y],
                            weight=WeightCarrier(s=Y**3 - X * Y))
        family.form(ConstructionFormChoices.ORIGINAL).tilde_psi
        ```
    """

    name: str
    phi: PolyMatrix
    psi: PolyMatrix
    weight: Optional[WeightCarrier] = None
    params: tuple = ()
    diagonal_reduction: Optional[FamilyForm] = None
    splitting: Optional[SuetinSplitting] = None
    description: str = ""
    original: FamilyForm = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        FamilyValidator.validate_name(self.name)
        original = FamilyForm(self.phi, self.psi, self.weight)
        object.__setattr__(self, "phi", original.phi)
        object.__setattr__(self, "psi", original.psi)
        object.__setattr__(self, "original", original)
        if isinstance(self.params, dict):
            object.__setattr__(self, "params", tuple(sorted(self.params.items())))

    @property
    def parameters(self):
        return dict(self.params)

    def form(self, choice=ConstructionFormChoices.ORIGINAL):
        """
        Returns the requested `FamilyForm` (`AUTO` is resolved by the construction layer).

        Raises:
        - `ConstructionUnavailable`: If the diagonal form is requested but not carried.
        """
        if choice == ConstructionFormChoices.DIAGONAL:
            if self.diagonal_reduction is None:
                raise ConstructionUnavailable(
                    f"Family '{self.name}' carries no diagonal reduction.",
                    details={"family": self.name},
                )
            return self.diagonal_reduction
        return self.original

    def available_forms(self):
        forms = [ConstructionFormChoices.ORIGINAL]
        if self.diagonal_reduction is not None:
            forms.append(ConstructionFormChoices.DIAGONAL)
        return forms


def as_form(value):
    """Accepts a `FamilySpec` (its original form) or a `FamilyForm`."""
    if isinstance(value, FamilySpec):
        return value.original
    return value


@dataclass(frozen=True)
class OneVariableFactor:
    """
    One-variable classical data `a(t) u'' + d(t) u'` with `deg a <= 2`, `deg d <= 1`.

    Attributes:
    - `name` (str): For example "hermite" or "jacobi(0,0)".
    - `a` (tuple): Coefficients `(a0, a1, a2)` of `a(t)`.
    - `d` (tuple): Coefficients `(d0, d1)` of `d(t)`.
    - `exponential` (tuple): Coefficients of the polynomial `s(t)` in `ω = exp(s) prod f^e`.
    - `factors` (tuple): Pairs `(coefficients of f(t), exponent)`.
    - `carrier` (bool): False when ω has no factored polynomial form (Bessel).
    """

    name: str
    a: tuple
    d: tuple
    exponential: tuple = ()
    factors: tuple = ()
    carrier: bool = True

    @staticmethod
    def _poly(coefficients, axis):
        result = BiPoly.zero()
        for power, value in enumerate(coefficients):
            if value:
                exponents = (power, 0) if axis == AxisChoices.X else (0, power)
                result = result + BiPoly.monomial(*exponents, value)
        return result

    def a_poly(self, axis):
        return self._poly(self.a, axis)

    def d_poly(self, axis):
        return self._poly(self.d, axis)

    def weight_parts(self, axis):
        """`(s, ((f, e), ...))` in the variable `axis`, exponent-zero factors dropped."""
        if not self.carrier:
            return None
        factors = tuple(
            (self._poly(base, axis), exponent) for base, exponent in self.factors if exponent
        )
        return self._poly(self.exponential, axis), factors
