import logging
from fractions import Fraction

from moments.choices import MomentProvenanceChoices
from moments.functional import MomentFunctional
from pearson.families import as_form
from pearson.operators import apply_L
from polycore.choices import AxisChoices
from polycore.exceptions import Inconsistent, Underdetermined
from polycore.linalg import solve_linear_system
from polycore.polynomial import BiPoly, monomials_of_degree, monomials_up_to

logger = logging.getLogger(__name__)


def pearson_relations(family, monomial):
    """
    The two polynomials `a m_x + b m_y + d m` and `b m_x + c m_y + e m` whose moments vanish
    for a solution of `div(Φ u) = Ψ^t u`.
    """
    form = as_form(family)
    m = BiPoly.monomial(*monomial)
    m_x, m_y = m.partial(AxisChoices.X), m.partial(AxisChoices.Y)
    return (
        form.a * m_x + form.b * m_y + form.d * m,
        form.b * m_x + form.c * m_y + form.e * m,
    )


def moments_from_pearson(family, cap):
    """
    Solves the matrix Pearson equation for the moments, degree by degree, with `μ_00 = 1`.

    At total degree `t` the relations of every monomial of degree `t - 1` involve moments of
    degree at most `t`; after substituting the known ones they are linear in the `t + 1`
    unknowns of degree `t`.

    Args:
    - `family`: `FamilySpec` (original form) or `FamilyForm`.
    - `cap`: Highest total degree to compute.

    Returns:
    - `MomentFunctional` with provenance "pearson-recurrence".

    Raises:
    - `Underdetermined`: With the degree and the free moments.
    - `Inconsistent`: With the degree, when the relations conflict.
    """
    if cap < 0:
        raise ValueError("The moment cap must be nonnegative.")
    known = {(0, 0): Fraction(1)}
    for degree in range(1, cap + 1):
        unknowns = monomials_of_degree(degree)
        position = {monomial: index for index, monomial in enumerate(unknowns)}
        matrix, rhs = [], []
        for monomial in monomials_of_degree(degree - 1):
            for relation in pearson_relations(family, monomial):
                row = [Fraction(0)] * len(unknowns)
                constant = Fraction(0)
                for key, value in relation.terms.items():
                    if key in position:
                        row[position[key]] += value
                    else:
                        constant += value * known[key]
                matrix.append(row)
                rhs.append([-constant])
        solution = solve_linear_system(matrix, rhs)
        if not solution.consistent:
            raise Inconsistent(
                f"The Pearson relations conflict at degree {degree}.",
                details={"degree": degree},
            )
        if solution.free_columns:
            free = [list(unknowns[index]) for index in solution.free_columns]
            raise Underdetermined(
                f"Moments of degree {degree} are not pinned down: {free}.",
                details={"degree": degree, "free": free},
            )
        for index, monomial in enumerate(unknowns):
            known[monomial] = solution.solution[index][0]
        logger.debug("Pearson moments solved through degree %s", degree)
    return MomentFunctional(known, cap, MomentProvenanceChoices.PEARSON_RECURRENCE)


def adjoint_residuals(functional, family, cap=None):
    """
    Monomials `m` with `<u, L[m]> != 0`, the moment-level form of `L*[u] = 0`.

    Returns:
    - A list of `(h, k, value)`; empty when the functional is annihilated.
    """
    cap = functional.cap if cap is None else cap
    residuals = []
    for h, k in monomials_up_to(cap):
        value = functional.pair_poly(apply_L(family, BiPoly.monomial(h, k)))
        if value:
            residuals.append((h, k, value))
    return residuals
