import logging
from dataclasses import dataclass, field

from django.core.exceptions import ValidationError

from pearson.families import FamilyForm, as_form
from pearson.symmetry import symmetrizability_data
from polycore.choices import AxisChoices
from polycore.polynomial import exact_divide

logger = logging.getLogger(__name__)


@dataclass
class SuetinReport:
    """
    Diagonal reduction obtained from the splittings `a = a1 a2`, `c = c1 c2`.

    Attributes:
    - `form` (FamilyForm | None): `Φ' = diag(p, q)`, `Ψ' = (beta0 + p_x, gamma0 + q_y)`, same ω;
      `None` when the result leaves the degree bounds of a family.
    - `conditions` (dict): Each degree/variable condition and whether it holds. The conditions
      are reported, never enforced.
    """

    form: FamilyForm
    conditions: dict = field(default_factory=dict)

    @property
    def all_conditions_hold(self):
        return all(self.conditions.values())


def suetin_reduction(family, splitting):
    """
    Computes `alpha0 = alpha / (a1 c1)`, `beta0 = beta / c1`, `gamma0 = gamma / a1`,
    `p = a1 alpha0` and `q = c1 alpha0`.

    Args:
    - `family`: `FamilySpec` or `FamilyForm` in original form.
    - `splitting`: `SuetinSplitting` with the factors `a1`, `c1`.

    Raises:
    - `NotDivisible`: If the supplied splitting does not divide the reduced data.
    """
    form = as_form(family)
    data = symmetrizability_data(form)
    a1, c1 = splitting.a1, splitting.c1
    alpha0 = exact_divide(data.alpha, a1 * c1)
    beta0 = exact_divide(data.beta, c1)
    gamma0 = exact_divide(data.gamma, a1)
    p = a1 * alpha0
    q = c1 * alpha0
    x, y = AxisChoices.X, AxisChoices.Y
    try:
        reduced = FamilyForm(
            phi=[[p, 0], [0, q]],
            psi=[beta0 + p.partial(x), gamma0 + q.partial(y)],
            weight=form.weight,
        )
    except ValidationError:
        reduced = None
    conditions = {
        "a1_free_of_y": not a1.depends_on(y),
        "c1_free_of_x": not c1.depends_on(x),
        "p_degree_at_most_2": p.total_degree <= 2,
        "q_degree_at_most_2": q.total_degree <= 2,
        "beta0_degree_at_most_1": beta0.total_degree <= 1,
        "gamma0_degree_at_most_1": gamma0.total_degree <= 1,
    }
    if not all(conditions.values()):
        logger.warning("Diagonal reduction conditions fail: %s", conditions)
    return SuetinReport(form=reduced, conditions=conditions)
