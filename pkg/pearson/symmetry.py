import logging
from dataclasses import dataclass, field

from diffcalc.carrier import carrier_derivative
from pearson.families import as_form
from polycore.choices import AxisChoices
from polycore.exceptions import DegenerateDeterminant
from polycore.polynomial import to_text

logger = logging.getLogger(__name__)


@dataclass
class SymmetryReport:
    """
    Outcome of checking `Φ ∇ω = Ψ̃ ω`.

    Attributes:
    - `checked` (bool): False when the form carries no factored ω.
    - `holds` (bool): Both scalar identities hold exactly.
    - `residuals` (list[str]): Residual numerators (over `prod f_i^{k_i}`, times ω), "0" when exact.
    """

    checked: bool
    holds: bool
    residuals: list = field(default_factory=list)

    def __bool__(self):
        return self.holds


def verify_symmetry_factor(family):
    """
    Checks `a ω_x + b ω_y = (d - a_x - b_y) ω` and `b ω_x + c ω_y = (e - b_x - c_y) ω` in
    carrier calculus.

    Returns:
    - `SymmetryReport`; failure is reported, never raised.
    """
    form = as_form(family)
    if form.weight is None:
        return SymmetryReport(checked=False, holds=False)
    weight = form.weight
    unit = weight.unit()
    omega_x = carrier_derivative(unit, weight, AxisChoices.X)
    omega_y = carrier_derivative(unit, weight, AxisChoices.Y)
    tilde = form.tilde_psi
    residuals = []
    for row, drift in zip(form.coefficient_rows(), (tilde.entry(0, 0), tilde.entry(1, 0))):
        left = omega_x.times(row[0]).add(omega_y.times(row[1]), weight)
        residual = left.add(unit.times(-drift), weight)
        residuals.append(residual.numerator)
    holds = all(residual.is_zero() for residual in residuals)
    if not holds:
        logger.info("Symmetry factor check failed: %s", [to_text(r) for r in residuals])
    return SymmetryReport(
        checked=True, holds=holds, residuals=[to_text(residual) for residual in residuals]
    )


@dataclass(frozen=True)
class SymmetrizabilityData:
    """`alpha = det Φ`, and `beta`, `gamma` with `Φ^{-1} Ψ̃ = (beta, gamma) / alpha`."""

    alpha: object
    beta: object
    gamma: object


def symmetrizability_data(family):
    form = as_form(family)
    tilde = form.tilde_psi
    t0, t1 = tilde.entry(0, 0), tilde.entry(1, 0)
    alpha = form.a * form.c - form.b * form.b
    beta = form.c * t0 - form.b * t1
    gamma = -(form.b * t0) + form.a * t1
    return SymmetrizabilityData(alpha, beta, gamma)


def check_symmetrizable(family):
    """
    Cross-derivative criterion `d_y(beta / alpha) = d_x(gamma / alpha)`, tested as the
    polynomial identity `beta_y alpha - beta alpha_y = gamma_x alpha - gamma alpha_x`.

    Raises:
    - `DegenerateDeterminant`: If `ac - b^2` vanishes identically.
    """
    data = symmetrizability_data(family)
    if data.alpha.is_zero():
        raise DegenerateDeterminant("det Φ = ac - b^2 vanishes identically.")
    x, y = AxisChoices.X, AxisChoices.Y
    left = data.beta.partial(y) * data.alpha - data.beta * data.alpha.partial(y)
    right = data.gamma.partial(x) * data.alpha - data.gamma * data.alpha.partial(x)
    return left == right
