from pearson.families import as_form
from polycore.choices import AxisChoices
from polycore.matrix import PolyMatrix
from polycore.polynomial import BiPoly


def apply_L(family, value):
    """
    `L[p] = a p_xx + 2b p_xy + c p_yy + d p_x + e p_y`, entrywise on matrices.

    Args:
    - `family`: A `FamilySpec` (original form) or a `FamilyForm`.
    - `value`: A `BiPoly` or a `PolyMatrix`.

    Returns:
    - Same shape as `value`; the degree never grows.
    """
    form = as_form(family)
    x, y = AxisChoices.X, AxisChoices.Y

    def operate(p):
        p_x = p.partial(x)
        p_y = p.partial(y)
        return (
            form.a * p_x.partial(x)
            + (form.b * p_x.partial(y)).scale(2)
            + form.c * p_y.partial(y)
            + form.d * p_x
            + form.e * p_y
        )

    if isinstance(value, PolyMatrix):
        return value.map(operate)
    return operate(BiPoly.coerce(value))


def divergence_form(family, value):
    """
    `div(Φ ∇p) + Ψ̃^t ∇p`, the divergence form of `L`; equal to `apply_L` for every `p`.
    """
    form = as_form(family)
    x, y = AxisChoices.X, AxisChoices.Y
    p = BiPoly.coerce(value)
    p_x, p_y = p.partial(x), p.partial(y)
    flux_x = form.a * p_x + form.b * p_y
    flux_y = form.b * p_x + form.c * p_y
    tilde = form.tilde_psi
    return flux_x.partial(x) + flux_y.partial(y) + tilde.entry(0, 0) * p_x + tilde.entry(1, 0) * p_y


def drift_independence(family):
    """
    Whether `d` and `e` are independent polynomials of exact degree 1, the precondition for a
    non-singular Λ_1. Reported, never enforced.
    """
    form = as_form(family)
    d, e = form.d, form.e
    if d.total_degree != 1 or e.total_degree != 1:
        return False
    return d.coefficient(1, 0) * e.coefficient(0, 1) != d.coefficient(0, 1) * e.coefficient(1, 0)
