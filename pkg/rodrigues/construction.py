import logging
from dataclasses import dataclass, field
from fractions import Fraction

from diffcalc.carrier import carrier_D, carrier_div_n, carrier_matrix
from diffcalc.operators import apply_D
from kronpow.kronecker import kron_power, selector
from moments.quasi_definite import full_moment_matrix
from pearson.choices import ConstructionFormChoices
from pearson.condition import psi_kn, solve_condR
from polycore.choices import AxisChoices
from polycore.exceptions import ConstructionUnavailable, NotDivisible
from polycore.linalg import solve_linear_system
from polycore.matrix import PolyMatrix
from polycore.polynomial import BiPoly, from_coefficient_vector, monomials_up_to, to_text
from rodrigues.choices import RouteChoices

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RodriguesVector:
    """
    The polynomial vector `Q_n^t = (Q_{n,0}, Q_{n-1,1}, ..., Q_{0,n})`.

    Attributes:
    - `n` (int): Degree.
    - `entries` (tuple[BiPoly]): `n + 1` polynomials.
    - `form` (str): The `ConstructionFormChoices` value the vector was built from.
    - `route` (str): The `RouteChoices` value that produced it.
    - `division_certificate` (tuple): For the carrier route, `(numerator, exponents)` pairs that
      divided exactly.
    """

    n: int
    entries: tuple
    form: str = ConstructionFormChoices.ORIGINAL
    route: str = RouteChoices.CARRIER
    division_certificate: tuple = field(default=(), compare=False)

    def column(self):
        """`Q_n` as an `(n+1) x 1` matrix."""
        return PolyMatrix.column(self.entries)

    def row(self):
        return PolyMatrix.row(self.entries)

    def same_polynomials(self, other):
        return self.entries == other.entries


def resolve_form(family, choice=ConstructionFormChoices.AUTO):
    """
    Picks the form a construction runs on.

    `AUTO` takes the original form when condition (R) holds there, else the diagonal reduction,
    else the original form with a warning.

    Returns:
    - `(choice, FamilyForm)`.
    """
    if choice != ConstructionFormChoices.AUTO:
        return ConstructionFormChoices(choice), family.form(choice)
    if solve_condR(family.phi):
        logger.info("Family '%s': condition (R) holds, using the original form", family.name)
        return ConstructionFormChoices.ORIGINAL, family.original
    if family.diagonal_reduction is not None:
        logger.warning(
            "Family '%s': condition (R) fails for the original Φ, using the diagonal form",
            family.name,
        )
        return ConstructionFormChoices.DIAGONAL, family.diagonal_reduction
    logger.warning(
        "Family '%s': condition (R) fails and no diagonal form exists, using the original form",
        family.name,
    )
    return ConstructionFormChoices.ORIGINAL, family.original


def _require_carrier(family, form, choice):
    if form.weight is None:
        raise ConstructionUnavailable(
            f"Family '{family.name}' has no factored symmetry factor for the {choice} form.",
            details={"family": family.name, "form": str(choice), "route": "carrier"},
        )


def _divide(terms, weight, family, n):
    entries, certificate = [], []
    for index, term in enumerate(terms):
        try:
            entries.append(term.to_polynomial(weight))
        except NotDivisible as exc:
            logger.error(
                "Family '%s': entry %s of Q_%s does not divide exactly", family.name, index, n
            )
            raise NotDivisible(
                f"Entry {index} of Q_{n} for '{family.name}' is not a polynomial.",
                details={**exc.details, "family": family.name, "degree": n, "entry": index},
            )
        certificate.append((to_text(term.numerator), tuple(term.exponents)))
    return tuple(entries), tuple(certificate)


def build_Q(family, n, form=ConstructionFormChoices.AUTO):
    """
    `Q_n^t = ω^{-1} div^{n}(Φ^{n} ω)` in carrier calculus.

    Args:
    - `family`: A `FamilySpec`.
    - `n`: Degree.
    - `form`: A `ConstructionFormChoices` value.

    Returns:
    - `RodriguesVector`.

    Raises:
    - `NotDivisible`: With the offending entry, when the hypotheses fail for this form.
    - `ConstructionUnavailable`: When the form carries no factored ω.
    """
    choice, selected = resolve_form(family, form)
    _require_carrier(family, selected, choice)
    if not solve_condR(selected.phi):
        logger.warning(
            "Family '%s': condition (R) fails for the %s form; constructing anyway",
            family.name,
            choice,
        )
    weight = selected.weight
    power = kron_power(selected.phi, n).body
    blocks = [carrier_matrix(power.row_block(i, 1), weight) for i in range(n + 1)]
    result = carrier_div_n(blocks, weight, n)
    entries, certificate = _divide(result[0], weight, family, n)
    logger.info("Family '%s': built Q_%s from the %s form", family.name, n, choice)
    return RodriguesVector(n, entries, choice, RouteChoices.CARRIER, certificate)


def build_Q_diagonal(family, n, form=ConstructionFormChoices.AUTO):
    """
    Diagonal specialization
    `Q_{n-i,i} = ω^{-1} binom(n, i) d_x^{n-i} d_y^i (a^{n-i} c^i ω)`, no Kronecker matrices.

    Raises:
    - `ConstructionUnavailable`: If the selected form has a non-diagonal Φ or no factored ω.
    """
    if form == ConstructionFormChoices.AUTO:
        choice = (
            ConstructionFormChoices.ORIGINAL
            if family.original.is_diagonal
            else ConstructionFormChoices.DIAGONAL
        )
    else:
        choice = ConstructionFormChoices(form)
    selected = family.form(choice)
    if not selected.is_diagonal:
        raise ConstructionUnavailable(
            f"The {choice} form of '{family.name}' is not diagonal.",
            details={"family": family.name, "form": str(choice)},
        )
    _require_carrier(family, selected, choice)
    weight = selected.weight
    terms = []
    for i in range(n + 1):
        start = weight.term(selected.a ** (n - i) * selected.c**i)
        # carrier_D already carries binom(n, i)
        terms.append(carrier_D(i, n, start, weight))
    entries, certificate = _divide(terms, weight, family, n)
    return RodriguesVector(n, entries, choice, RouteChoices.CARRIER, certificate)


def reduction_step(form, condition, matrix, n):
    """
    One descent step `A_n -> A_{n-1}` with
    `div^{n}(Φ^{n} A_n ω) = div^{n-1}(Φ^{n-1} A_{n-1} ω)`:

    `A_{n-1} = {[Ψ_0^{n-1} + Ψ̃_0 I] L^0 + [Ψ_1^{n-1} + Ψ̃_1 I] L^1} A_n
    + (a L^0 + b L^1)(A_n)_x + (b L^0 + c L^1)(A_n)_y`.

    Args:
    - `form`: The `FamilyForm`.
    - `condition`: Its `CondRSolution`.
    - `matrix`: `A_n`, with `n + 1` rows.
    - `n`: Current order (at least 1).
    """
    if n < 1:
        raise ValueError("A reduction step needs n >= 1.")
    first, second = selector(n - 1, 0), selector(n - 1, 1)
    tilde = form.tilde_psi
    identity = PolyMatrix.identity(n)
    left = psi_kn(condition.psi0, condition.psi1, form.phi, n - 1, 0) + identity.scale(
        tilde.entry(0, 0)
    )
    right = psi_kn(condition.psi0, condition.psi1, form.phi, n - 1, 1) + identity.scale(
        tilde.entry(1, 0)
    )
    along_x = first.scale(form.a) + second.scale(form.b)
    along_y = first.scale(form.b) + second.scale(form.c)
    return (
        (left @ first + right @ second) @ matrix
        + along_x @ matrix.partial(AxisChoices.X)
        + along_y @ matrix.partial(AxisChoices.Y)
    )


def build_Q_by_reduction(family, n, form=ConstructionFormChoices.AUTO):
    """
    ω-free, division-free construction: iterate `reduction_step` from `A_n = I_{n+1}` down to
    `A_0 = Q_n^t`.

    Raises:
    - `ConstructionUnavailable`: If condition (R) fails for the selected form.
    """
    choice, selected = resolve_form(family, form)
    condition = solve_condR(selected.phi)
    if not condition:
        raise ConstructionUnavailable(
            f"Condition (R) fails for the {choice} form of '{family.name}'.",
            details={"family": family.name, "form": str(choice), "route": "reduction"},
        )
    matrix = PolyMatrix.identity(n + 1)
    for order in range(n, 0, -1):
        matrix = reduction_step(selected, condition, matrix, order)
    return RodriguesVector(n, matrix.row_entries(0), choice, RouteChoices.REDUCTION)


def moment_route_rhs(functional, form, n):
    """
    Right-hand sides `(-1)^n sum_i <u, Φ^{n}_{ij} D_i^n m>` for every monomial `m` of degree
    `<= n`, one column per `j`.
    """
    power = kron_power(form.phi, n).body
    sign = -1 if n % 2 else 1
    rows = []
    for h, k in monomials_up_to(n):
        monomial = BiPoly.monomial(h, k)
        derivatives = [apply_D(i, n, monomial) for i in range(n + 1)]
        row = []
        for j in range(n + 1):
            total = Fraction(0)
            for i in range(n + 1):
                if derivatives[i].is_zero() or power.entry(i, j).is_zero():
                    continue
                total += functional.pair_poly(power.entry(i, j) * derivatives[i])
            row.append(sign * total)
        rows.append(row)
    return rows


def build_Q_from_moments(functional, family, n, form=ConstructionFormChoices.AUTO):
    """
    Moment route: solves `<u, Q_{n,j} m> = (-1)^n sum_i <u, Φ^{n}_{ij} D_i^n m>` for all
    monomials `deg m <= n`, with the unknown `Q_{n,j}` ranging over P_n.

    Raises:
    - `ConstructionUnavailable`: If `M_n` is singular.
    - `MomentCapExceeded`: If the cap is below `2n`.
    """
    choice, selected = resolve_form(family, form)
    moments = full_moment_matrix(functional, n)
    rhs = moment_route_rhs(functional, selected, n)
    solution = solve_linear_system(moments, rhs)
    if not solution.unique:
        raise ConstructionUnavailable(
            f"The moment matrix M_{n} of '{family.name}' is singular.",
            details={"family": family.name, "degree": n, "route": "moment"},
        )
    entries = tuple(
        from_coefficient_vector([row[j] for row in solution.solution], n) for j in range(n + 1)
    )
    return RodriguesVector(n, entries, choice, RouteChoices.MOMENT)


def default_route(family, form_choice):
    """Carrier when the form has a factored ω; families without one are moment-route only."""
    if family.form(form_choice).weight is not None:
        return RouteChoices.CARRIER
    return RouteChoices.MOMENT


def build_by_route(route, family, n, form, functional=None):
    if route == RouteChoices.CARRIER:
        return build_Q(family, n, form)
    if route == RouteChoices.REDUCTION:
        return build_Q_by_reduction(family, n, form)
    if functional is None:
        raise ConstructionUnavailable("The moment route needs a moment functional.")
    return build_Q_from_moments(functional, family, n, form)


def build_sequence(
    family, max_degree, form=ConstructionFormChoices.AUTO, route=None, functional=None
):
    """
    `Q_0..Q_N` on one form along one route.

    Args:
    - `route`: A `RouteChoices` value; `default_route` when omitted.
    - `functional`: Required by the moment route.

    Returns:
    - `list[RodriguesVector]`.
    """
    choice, _ = resolve_form(family, form)
    route = route or default_route(family, choice)
    logger.info(
        "Family '%s': building Q_0..Q_%s on the %s form by the %s route",
        family.name,
        max_degree,
        choice,
        route,
    )
    return [
        build_by_route(route, family, n, choice, functional) for n in range(max_degree + 1)
    ]
