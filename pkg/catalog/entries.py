import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from django.core.exceptions import ValidationError

from catalog.choices import CatalogFamilyChoices
from catalog.factors import bessel, hermite, jacobi, laguerre
from catalog.validators import CatalogValidator
from diffcalc.carrier import WeightCarrier
from moments.choices import ClosedFormDomainChoices
from moments.closed_form import closed_form_moments
from pearson.families import FamilyForm, FamilySpec, SuetinSplitting
from pearson.symmetry import check_symmetrizable, verify_symmetry_factor
from polycore.choices import AxisChoices
from polycore.exceptions import ConstructionUnavailable
from polycore.polynomial import ONE, X, Y
from rodrigues.choices import LambdaShapeChoices

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class ParameterDomain:
    """
    A rational parameter with its admissible range.

    Attributes:
    - `name` (str)
    - `lower` (Fraction | None): Strict lower bound.
    - `default` (Fraction | None): Used when the parameter is omitted; None makes it required.
    - `excludes_negative_integers_from` (int | None): Integers `<= this value` are excluded.
    """

    name: str
    lower: Optional[Fraction] = None
    default: Optional[Fraction] = None
    excludes_negative_integers_from: Optional[int] = None

    def describe(self):
        if self.lower is not None:
            text = f"{self.name} > {self.lower}"
        elif self.excludes_negative_integers_from is not None:
            text = f"{self.name} not an integer <= {self.excludes_negative_integers_from}"
        else:
            text = f"{self.name} rational"
        if self.default is not None:
            text += f" (default {self.default})"
        return text

    def validate(self, value):
        """
        Raises:
        - `ValidationError`: `invalid_parameter` outside the domain.
        """
        if self.lower is not None and value <= self.lower:
            raise ValidationError(
                f"Parameter {self.describe()} is required, got {value}.",
                code="invalid_parameter",
            )
        limit = self.excludes_negative_integers_from
        if limit is not None and value.denominator == 1 and value <= limit:
            raise ValidationError(
                f"Parameter {self.name} cannot be the integer {value}.", code="invalid_parameter"
            )


@dataclass(frozen=True)
class CatalogEntry:
    """
    A built-in family with its documentation metadata.

    Attributes:
    - `name` (str): A `CatalogFamilyChoices` value.
    - `example` (int): Number of the worked example it reproduces.
    - `builder` (callable): `builder(**params) -> FamilySpec`.
    - `parameters` (tuple[ParameterDomain])
    - `expectations` (dict): Documented flags: `condr_original`, `condr_diagonal`,
      `symmetrizable`, `lambda_shape` (None when undocumented).
    - `description` (str)
    """

    name: str
    example: int
    builder: Callable
    parameters: tuple = ()
    expectations: dict = field(default_factory=dict)
    description: str = ""

    def build(self, params):
        return self.builder(**params)


def _ball_weight(mu):
    if mu == HALF:
        return WeightCarrier()
    return WeightCarrier(factors=((1 - X * X - Y * Y, mu - HALF),))


def build_intriguing():
    """Φ = (3y 1; 1 0), Ψ = (-x, -y), ω = exp(y^3 - xy)."""
    return FamilySpec(
        name=CatalogFamilyChoices.KRALL_SHEFFER_INTRIGUING.value,
        phi=[[3 * Y, 1], [1, 0]],
        psi=[-X, -Y],
        weight=WeightCarrier(s=Y**3 - X * Y),
        description="Krall-Sheffer type family whose symmetry factor is not a weight function.",
    )


def build_ball(mu):
    """
    Original form Φ = (x^2 - 1, xy; xy, y^2 - 1), Ψ = (2mu + 2)(x, y); diagonal form
    Φ' = (1 - x^2 - y^2) I, Ψ' = -(2mu + 1)(x, y); ω = (1 - x^2 - y^2)^(mu - 1/2).
    """
    weight = _ball_weight(mu)
    radial = 1 - X * X - Y * Y
    return FamilySpec(
        name=CatalogFamilyChoices.BALL.value,
        phi=[[X * X - 1, X * Y], [X * Y, Y * Y - 1]],
        psi=[(2 * mu + 2) * X, (2 * mu + 2) * Y],
        weight=weight,
        params={"mu": mu},
        diagonal_reduction=FamilyForm(
            phi=[[radial, 0], [0, radial]],
            psi=[-(2 * mu + 1) * X, -(2 * mu + 1) * Y],
            weight=weight,
        ),
        splitting=SuetinSplitting(a1=ONE, c1=ONE),
        description="Orthogonal polynomials on the unit disk.",
    )


def build_simplex(alpha, beta, gamma):
    """
    Φ = (x(x - 1), xy; xy, y(y - 1)), Ψ = (Sx - alpha - 1, Sy - beta - 1) with
    `S = alpha + beta + gamma + 3`; ω = x^alpha y^beta (1 - x - y)^gamma.
    """
    total = alpha + beta + gamma + 3
    rest = 1 - X - Y
    factors = tuple(
        (base, exponent) for base, exponent in ((X, alpha), (Y, beta), (rest, gamma)) if exponent
    )
    weight = WeightCarrier(factors=factors)
    return FamilySpec(
        name=CatalogFamilyChoices.SIMPLEX.value,
        phi=[[X * X - X, X * Y], [X * Y, Y * Y - Y]],
        psi=[total * X - (alpha + 1), total * Y - (beta + 1)],
        weight=weight,
        params={"alpha": alpha, "beta": beta, "gamma": gamma},
        diagonal_reduction=FamilyForm(
            phi=[[X * rest, 0], [0, Y * rest]],
            psi=[
                alpha * rest - gamma * X + 1 - 2 * X - Y,
                beta * rest - gamma * Y + 1 - X - 2 * Y,
            ],
            weight=weight,
        ),
        splitting=SuetinSplitting(a1=X, c1=Y),
        description="Orthogonal polynomials on the triangle x, y >= 0, x + y <= 1.",
    )


def build_diagonal_disk(mu):
    """The disk written directly in diagonal form: Φ = (1 - x^2 - y^2) I, Ψ = -(2mu + 1)(x, y)."""
    radial = 1 - X * X - Y * Y
    return FamilySpec(
        name=CatalogFamilyChoices.DIAGONAL_DISK.value,
        phi=[[radial, 0], [0, radial]],
        psi=[-(2 * mu + 1) * X, -(2 * mu + 1) * Y],
        weight=_ball_weight(mu),
        params={"mu": mu},
        description="Diagonal Pearson form; Q_{n-i,i} from one-variable derivatives.",
    )


def tensor_family(name, first, second, params=None):
    """
    Tensor product of two one-variable factors: Φ = diag(a1(x), a2(y)), Ψ = (d1(x), d2(y)) and
    ω = ω1(x) ω2(y). Without a carrier on either side the family has no ω.
    """
    x, y = AxisChoices.X, AxisChoices.Y
    left, right = first.weight_parts(x), second.weight_parts(y)
    weight = None
    if left is not None and right is not None:
        weight = WeightCarrier(s=left[0] + right[0], factors=left[1] + right[1])
    return FamilySpec(
        name=name,
        phi=[[first.a_poly(x), 0], [0, second.a_poly(y)]],
        psi=[first.d_poly(x), second.d_poly(y)],
        weight=weight,
        params=params or {},
        description=f"Tensor product {first.name} x {second.name}.",
    )


def build_hermite_hermite():
    return tensor_family(CatalogFamilyChoices.TENSOR_HERMITE_HERMITE.value, hermite(), hermite())


def build_laguerre_jacobi(alpha, beta, gamma):
    """Laguerre(alpha) in x, Jacobi(beta, gamma) in y."""
    return tensor_family(
        CatalogFamilyChoices.TENSOR_LAGUERRE_JACOBI.value,
        laguerre(alpha),
        jacobi(beta, gamma),
        {"alpha": alpha, "beta": beta, "gamma": gamma},
    )


def build_hermite_laguerre(alpha):
    return tensor_family(
        CatalogFamilyChoices.TENSOR_HERMITE_LAGUERRE.value,
        hermite(),
        laguerre(alpha),
        {"alpha": alpha},
    )


def build_bessel_hermite(alpha):
    return tensor_family(
        CatalogFamilyChoices.TENSOR_BESSEL_HERMITE.value,
        bessel(alpha),
        hermite(),
        {"alpha": alpha},
    )


_ABOVE_MINUS_ONE = Fraction(-1)
_ZERO = Fraction(0)

CATALOG = {
    entry.name: entry
    for entry in (
        CatalogEntry(
            name=CatalogFamilyChoices.DIAGONAL_DISK.value,
            example=1,
            builder=build_diagonal_disk,
            parameters=(ParameterDomain("mu", lower=-HALF),),
            expectations={"condr_original": True, "symmetrizable": True},
            description="Disk in diagonal Pearson form.",
        ),
        CatalogEntry(
            name=CatalogFamilyChoices.TENSOR_HERMITE_HERMITE.value,
            example=2,
            builder=build_hermite_hermite,
            expectations={
                "condr_original": True,
                "symmetrizable": True,
                "lambda_shape": LambdaShapeChoices.SCALAR,
            },
            description="Hermite x Hermite.",
        ),
        CatalogEntry(
            name=CatalogFamilyChoices.TENSOR_LAGUERRE_JACOBI.value,
            example=2,
            builder=build_laguerre_jacobi,
            parameters=(
                ParameterDomain("alpha", lower=_ABOVE_MINUS_ONE, default=_ZERO),
                ParameterDomain("beta", lower=_ABOVE_MINUS_ONE, default=_ZERO),
                ParameterDomain("gamma", lower=_ABOVE_MINUS_ONE, default=_ZERO),
            ),
            expectations={
                "condr_original": True,
                "symmetrizable": True,
                "lambda_shape": LambdaShapeChoices.DIAGONAL,
            },
            description="Laguerre(alpha) x Jacobi(beta, gamma).",
        ),
        CatalogEntry(
            name=CatalogFamilyChoices.TENSOR_HERMITE_LAGUERRE.value,
            example=2,
            builder=build_hermite_laguerre,
            parameters=(ParameterDomain("alpha", lower=_ABOVE_MINUS_ONE, default=_ZERO),),
            expectations={
                "condr_original": True,
                "symmetrizable": True,
                "lambda_shape": LambdaShapeChoices.DIAGONAL,
            },
            description="Hermite x Laguerre(alpha).",
        ),
        CatalogEntry(
            name=CatalogFamilyChoices.TENSOR_BESSEL_HERMITE.value,
            example=2,
            builder=build_bessel_hermite,
            parameters=(
                ParameterDomain("alpha", default=_ZERO, excludes_negative_integers_from=-2),
            ),
            expectations={
                "condr_original": True,
                "symmetrizable": True,
                "lambda_shape": LambdaShapeChoices.DIAGONAL,
            },
            description="Bessel(alpha) x Hermite; moment route only.",
        ),
        CatalogEntry(
            name=CatalogFamilyChoices.BALL.value,
            example=4,
            builder=build_ball,
            parameters=(ParameterDomain("mu", lower=-HALF),),
            expectations={
                "condr_original": False,
                "condr_diagonal": True,
                "symmetrizable": True,
                "lambda_shape": LambdaShapeChoices.SCALAR,
            },
            description="Unit disk with the Suetin splitting a1 = c1 = 1.",
        ),
        CatalogEntry(
            name=CatalogFamilyChoices.SIMPLEX.value,
            example=5,
            builder=build_simplex,
            parameters=(
                ParameterDomain("alpha", lower=_ABOVE_MINUS_ONE),
                ParameterDomain("beta", lower=_ABOVE_MINUS_ONE),
                ParameterDomain("gamma", lower=_ABOVE_MINUS_ONE),
            ),
            expectations={
                "condr_original": True,
                "condr_diagonal": True,
                "symmetrizable": True,
                "lambda_shape": LambdaShapeChoices.SCALAR,
            },
            description="Triangle with the Suetin splitting a1 = x, c1 = y.",
        ),
        CatalogEntry(
            name=CatalogFamilyChoices.KRALL_SHEFFER_INTRIGUING.value,
            example=6,
            builder=build_intriguing,
            expectations={
                "condr_original": True,
                "symmetrizable": True,
                "lambda_shape": LambdaShapeChoices.SCALAR,
            },
            description="Krall-Sheffer case whose symmetry factor exp(y^3 - xy) is not a weight.",
        ),
    )
}


def get_entry(name):
    """
    Raises:
    - `ValidationError`: `unknown_family`.
    """
    CatalogValidator.validate_family_name(name)
    return CATALOG[name]


def _check_loaded(family):
    for choice in family.available_forms():
        form = family.form(choice)
        if form.weight is not None and not verify_symmetry_factor(form):
            logger.error("Catalog family '%s' fails its symmetry factor (%s)", family.name, choice)
            raise ValidationError(
                f"Catalog family '{family.name}' has a symmetry factor that does not match "
                f"its {choice} form.",
                code="weight_mismatch",
            )
    if not check_symmetrizable(family):
        logger.warning("Catalog family '%s' is not symmetrizable", family.name)


def load(name, params=None):
    """
    Instantiates a built-in family.

    Args:
    - `name`: A `CatalogFamilyChoices` value.
    - `params`: Parameter mapping; rationals or "p/q" strings.

    Returns:
    - `FamilySpec`.

    Raises:
    - `ValidationError`: `unknown_family`, `invalid_parameter`, `missing_parameter`,
      `decimal_rejected`, `weight_mismatch`.

    Usage:
        ```
        load("ball", {"mu": "1/2"}).psi      # (3x; 3y)
        ```
    """
    entry = get_entry(name)
    resolved = CatalogValidator.validate_parameters(entry, params)
    family = entry.build(resolved)
    _check_loaded(family)
    logger.debug("Loaded catalog family '%s' with %s", name, resolved)
    return family


def expectations_for(name):
    """Documented flags of a built-in family, or an empty dict for user families."""
    entry = CATALOG.get(name)
    return dict(entry.expectations) if entry else {}


def resolve(name, params=None):
    """
    Built-in entries first, stored user documents second.

    Raises:
    - `ValidationError`: `unknown_family` when neither knows `name`, or the errors of `load`.
    """
    from catalog.models import FamilyDocument

    if name in CATALOG:
        return load(name, params)
    if params:
        raise ValidationError(
            f"Stored family '{name}' takes no parameters.", code="invalid_parameter"
        )
    return FamilyDocument.objects.get_family(name)


def _closed_form_parameters(name, params):
    family = CatalogFamilyChoices
    if name in (family.BALL, family.DIAGONAL_DISK):
        return ClosedFormDomainChoices.BALL, {"mu": params["mu"]}
    if name == family.SIMPLEX:
        return ClosedFormDomainChoices.SIMPLEX, params
    factors = {
        family.TENSOR_HERMITE_HERMITE: lambda: (hermite(), hermite()),
        family.TENSOR_LAGUERRE_JACOBI: lambda: (
            laguerre(params["alpha"]),
            jacobi(params["beta"], params["gamma"]),
        ),
        family.TENSOR_HERMITE_LAGUERRE: lambda: (hermite(), laguerre(params["alpha"])),
        family.TENSOR_BESSEL_HERMITE: lambda: (bessel(params["alpha"]), hermite()),
    }
    if name in factors:
        first, second = factors[name]()
        return ClosedFormDomainChoices.TENSOR, {"first": first, "second": second}
    return None, None


def closed_form_for(name, params, cap):
    """
    Closed-form moments of a built-in family, an independent oracle for the Pearson moments.

    Raises:
    - `ValidationError`: Parameter errors, as in `load`.
    - `ConstructionUnavailable`: The family has no closed form (the intriguing case, user families).
    """
    resolved = CatalogValidator.validate_parameters(get_entry(name), params)
    domain, arguments = _closed_form_parameters(name, resolved)
    if domain is None:
        raise ConstructionUnavailable(
            f"Family '{name}' has no closed-form moments.", details={"family": name}
        )
    return closed_form_moments(domain, cap, **arguments)
