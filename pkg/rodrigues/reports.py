import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from django.conf import settings
from django.core.exceptions import ValidationError

from moments.functional import MomentFunctional
from moments.pearson_solver import moments_from_pearson
from moments.quasi_definite import QuasiDefiniteReport, quasi_definite_check
from pearson.choices import ConstructionFormChoices
from pearson.condition import solve_condR
from pearson.operators import drift_independence
from pearson.suetin import SuetinReport, suetin_reduction
from pearson.symmetry import SymmetryReport, check_symmetrizable, verify_symmetry_factor
from polycore.exceptions import (
    ConstructionUnavailable,
    DegenerateDeterminant,
    NonzeroResidual,
    NotDivisible,
    Unsolvable,
)
from polycore.linalg import determinant
from rodrigues.choices import FailureKindChoices, LambdaShapeChoices, RouteChoices
from rodrigues.construction import (
    RodriguesVector,
    build_by_route,
    default_route,
    resolve_form,
)
from rodrigues.verification import (
    ChangeOfBasis,
    Cor2Result,
    DistributionalResult,
    GramResult,
    LambdaResult,
    OrthogonalityTable,
    change_of_basis,
    cor2_check,
    distributional_identity_check,
    exact_degree_check,
    gram,
    ps_check,
    solve_lambda,
    verify_orthogonality,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VerificationContext:
    """Immutable inputs shared by every per-degree task."""

    family: object
    form: str
    route: str
    functional: MomentFunctional
    window: int


@dataclass
class DegreeSection:
    """
    Everything checked at one degree `n`.

    `route_agreement` maps each alternative route to True/False, or None when that route is not
    available for the family.
    """

    n: int
    vector: Optional[RodriguesVector] = None
    construction_error: Optional[dict] = None
    route_agreement: dict = field(default_factory=dict)
    orthogonality: Optional[OrthogonalityTable] = None
    gram: Optional[GramResult] = None
    eigen: Optional[LambdaResult] = None
    eigen_error: Optional[dict] = None
    ps: Optional[bool] = None
    exact_degree: Optional[bool] = None
    cor2: Optional[Cor2Result] = None
    distributional: Optional[DistributionalResult] = None
    change_of_basis: Optional[ChangeOfBasis] = None
    change_of_basis_error: Optional[dict] = None

    @property
    def implication_holds(self):
        """Nonsingular `<u, Φ^{n}>` must come with the PS flag and a nonsingular H_n."""
        if self.cor2 is None or not self.cor2.phi_pairing_nonsingular:
            return None
        return bool(self.ps and self.gram and self.gram.nonsingular)

    def failures(self):
        """`(FailureKindChoices, message)` pairs, empty when every check passed."""
        if self.construction_error is not None:
            return [(FailureKindChoices.CONSTRUCTION, self.construction_error["message"])]
        found = []
        if not self.orthogonality.holds:
            found.append((FailureKindChoices.ORTHOGONALITY, f"Q_{self.n} is not orthogonal"))
        if self.eigen_error is not None:
            kind = (
                FailureKindChoices.RESIDUAL
                if self.eigen_error["error"] == NonzeroResidual.code
                else FailureKindChoices.MATH
            )
            found.append((kind, self.eigen_error["message"]))
        checks = {
            "route disagreement": all(
                value is not False for value in self.route_agreement.values()
            ),
            "H_n singular": self.gram.nonsingular,
            "leading matrix singular": self.ps,
            "entry of inexact degree": self.exact_degree,
            "moment identity fails": self.cor2.holds,
            "distributional identity fails": self.distributional.holds,
            "nonsingular <u, Φ^{n}> without WOPS flags": self.implication_holds is not False,
        }
        if self.change_of_basis is not None:
            checks["monic basis mismatch"] = (
                self.change_of_basis.exact and self.change_of_basis.nonsingular
            )
        else:
            checks["monic basis unavailable"] = False
        found.extend(
            (FailureKindChoices.MATH, f"{label} at n={self.n}")
            for label, passed in checks.items()
            if not passed
        )
        return found


@dataclass
class VerificationReport:
    """
    Full diagnostic output for one family.

    Attributes:
    - `form`, `route`: What the constructions ran on.
    - `condr`: Condition (R) per available form.
    - `symmetry`: `SymmetryReport` per available form.
    - `phireg`: `det <u, Φ> != 0` per available form.
    - `sections`: One `DegreeSection` per `n = 0..max_degree`.
    - `expectations` / `conformance`: Documented flags and whether the observed ones match.
    """

    family: str
    form: str
    route: str
    max_degree: int
    cap: int
    functional: MomentFunctional
    condr: dict = field(default_factory=dict)
    symmetry: dict = field(default_factory=dict)
    symmetrizable: Optional[bool] = None
    phireg: dict = field(default_factory=dict)
    drift_independent: Optional[bool] = None
    suetin: Optional[SuetinReport] = None
    suetin_agrees: Optional[bool] = None
    quasi_definite: Optional[QuasiDefiniteReport] = None
    sections: list = field(default_factory=list)
    expectations: dict = field(default_factory=dict)

    @property
    def lambda_shape(self):
        """Aggregate shape of Λ_1..Λ_N (Λ_0 = 0 says nothing)."""
        shapes = {
            section.eigen.shape
            for section in self.sections
            if section.n >= 1 and section.eigen is not None
        }
        if not shapes:
            return None
        for shape in (LambdaShapeChoices.GENERAL, LambdaShapeChoices.DIAGONAL):
            if shape in shapes:
                return shape
        return LambdaShapeChoices.SCALAR

    def observed(self):
        return {
            "condr_original": self.condr.get(ConstructionFormChoices.ORIGINAL),
            "condr_diagonal": self.condr.get(ConstructionFormChoices.DIAGONAL),
            "symmetrizable": self.symmetrizable,
            "lambda_shape": self.lambda_shape,
        }

    @property
    def conformance(self):
        observed = self.observed()
        return {
            name: observed.get(name) == expected
            for name, expected in self.expectations.items()
            if expected is not None
        }

    def failures(self):
        found = []
        for section in self.sections:
            found.extend(section.failures())
        for form, report in self.symmetry.items():
            if report.checked and not report.holds:
                found.append(
                    (FailureKindChoices.MATH, f"symmetry factor fails for the {form} form")
                )
        if self.quasi_definite is not None and not self.quasi_definite.consistent:
            found.append((FailureKindChoices.MATH, "a moment matrix is singular"))
        if self.suetin_agrees is False:
            found.append(
                (FailureKindChoices.MATH, "Suetin reduction disagrees with the diagonal form")
            )
        found.extend(
            (FailureKindChoices.MATH, f"expected flag '{name}' does not hold")
            for name, conforms in self.conformance.items()
            if not conforms
        )
        return found

    def outcome(self):
        """The most severe failure kind, or None when everything passed."""
        kinds = {kind for kind, _ in self.failures()}
        for kind in FailureKindChoices.values:
            if kind in kinds:
                return FailureKindChoices(kind)
        return None

    @property
    def passed(self):
        return self.outcome() is None

    @property
    def vectors(self):
        return [section.vector for section in self.sections if section.vector is not None]


def _agrees(context, route, n, vector):
    try:
        other = build_by_route(route, context.family, n, context.form, context.functional)
    except (ConstructionUnavailable, NotDivisible):
        return None
    return other.same_polynomials(vector)


def _route_agreement(context, n, vector):
    agreement = {}
    form = context.family.form(context.form)
    alternatives = [RouteChoices.REDUCTION, RouteChoices.MOMENT]
    if form.weight is not None:
        alternatives.insert(0, RouteChoices.CARRIER)
    for route in alternatives:
        if route != context.route:
            agreement[str(route)] = _agrees(context, route, n, vector)
    return agreement


def verify_degree(context, n):
    """Builds `Q_n` along the context's route and runs every per-degree check on it."""
    section = DegreeSection(n)
    family, functional = context.family, context.functional
    form = family.form(context.form)
    try:
        vector = build_by_route(context.route, family, n, context.form, functional)
    except (NotDivisible, ConstructionUnavailable) as exc:
        section.construction_error = exc.as_document()
        logger.info("Family '%s', n=%s: construction failed (%s)", family.name, n, exc.code)
        return section
    section.vector = vector
    section.route_agreement = _route_agreement(context, n, vector)
    section.orthogonality = verify_orthogonality(functional, vector)
    section.gram = gram(functional, vector)
    section.ps = ps_check(vector)
    section.exact_degree = exact_degree_check(vector)
    try:
        section.eigen = solve_lambda(family, vector)
    except (Unsolvable, NonzeroResidual) as exc:
        section.eigen_error = exc.as_document()
    section.cor2 = cor2_check(functional, form, vector)
    section.distributional = distributional_identity_check(
        functional, form, vector, context.window
    )
    try:
        section.change_of_basis = change_of_basis(functional, vector)
    except ConstructionUnavailable as exc:
        section.change_of_basis_error = exc.as_document()
    logger.info(
        "Family '%s', n=%s: %s",
        family.name,
        n,
        "passed" if not section.failures() else "failed",
    )
    return section


def _verify_degree_task(arguments):
    context, n = arguments
    return verify_degree(context, n)


def _phireg(functional, form):
    return determinant(functional.pair(form.phi)) != 0


def resolve_cap(max_degree, cap=None):
    """
    Default cap `2N + BIVARIATE["CAP_MARGIN"]`.

    Raises:
    - `ValidationError`: `invalid_cap` when `cap < 2N`.
    """
    if cap is None:
        cap = 2 * max_degree + settings.BIVARIATE["CAP_MARGIN"]
    if cap < 2 * max_degree:
        raise ValidationError(
            f"The moment cap {cap} is below 2N = {2 * max_degree}.", code="invalid_cap"
        )
    return cap


def verify_family(
    family,
    max_degree,
    form=ConstructionFormChoices.AUTO,
    cap=None,
    workers=None,
    functional=None,
    expectations=None,
    window=None,
):
    """
    Assembles the verification report for `Q_0..Q_N`.

    Args:
    - `family`: A `FamilySpec`.
    - `max_degree`: `N`.
    - `form`: A `ConstructionFormChoices` value; `AUTO` follows `resolve_form`.
    - `cap`: Moment cap; see `resolve_cap`.
    - `workers`: Worker processes for the per-degree tasks (default `BIVARIATE["WORKERS"]`).
    - `functional`: Optional moment functional replacing the Pearson moments.
    - `expectations`: Documented flags to conform to (`condr_original`, `condr_diagonal`,
      `symmetrizable`, `lambda_shape`).
    - `window`: Extra degrees for the distributional identity.

    Returns:
    - `VerificationReport`.

    Raises:
    - `ValidationError`: `invalid_cap`.
    - `Underdetermined` / `Inconsistent`: If the Pearson moments cannot be computed.
    """
    bivariate = settings.BIVARIATE
    cap = resolve_cap(max_degree, cap)
    workers = workers or bivariate["WORKERS"]
    window = bivariate["DISTRIBUTIONAL_WINDOW"] if window is None else window
    if functional is None:
        functional = moments_from_pearson(family, cap)
    elif functional.cap < cap:
        raise ValidationError(
            f"The supplied moments stop at degree {functional.cap}; {cap} is needed.",
            code="invalid_cap",
        )
    else:
        functional = functional.truncated(cap)

    choice, _ = resolve_form(family, form)
    route = default_route(family, choice)
    report = VerificationReport(
        family=family.name,
        form=str(choice),
        route=str(route),
        max_degree=max_degree,
        cap=cap,
        functional=functional,
        expectations=dict(expectations or {}),
    )
    for available in family.available_forms():
        selected = family.form(available)
        report.condr[available] = bool(solve_condR(selected.phi))
        report.symmetry[available] = (
            verify_symmetry_factor(selected)
            if selected.weight is not None
            else SymmetryReport(checked=False, holds=False)
        )
        report.phireg[available] = _phireg(functional, selected)
    try:
        report.symmetrizable = check_symmetrizable(family)
    except DegenerateDeterminant:
        report.symmetrizable = None
    report.drift_independent = drift_independence(family)
    if family.splitting is not None:
        report.suetin = suetin_reduction(family, family.splitting)
        if report.suetin.form is not None and family.diagonal_reduction is not None:
            report.suetin_agrees = (
                report.suetin.form.phi == family.diagonal_reduction.phi
                and report.suetin.form.psi == family.diagonal_reduction.psi
            )
    report.quasi_definite = quasi_definite_check(functional, max_degree)

    context = VerificationContext(family, choice, route, functional, window)
    degrees = range(max_degree + 1)
    if workers > 1 and max_degree > 0:
        logger.debug("Fanning %s degrees out to %s workers", max_degree + 1, workers)
        with ProcessPoolExecutor(max_workers=workers) as executor:
            report.sections = list(
                executor.map(_verify_degree_task, [(context, n) for n in degrees])
            )
    else:
        report.sections = [verify_degree(context, n) for n in degrees]
    logger.info(
        "Family '%s' verified up to n=%s: %s",
        family.name,
        max_degree,
        report.outcome() or "all checks passed",
    )
    return report
