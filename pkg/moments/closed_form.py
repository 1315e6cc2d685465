"""Closed-form normalized moment tables, used as independent oracles for the Pearson solver."""
from fractions import Fraction

from django.core.exceptions import ValidationError

from moments.choices import ClosedFormDomainChoices, MomentProvenanceChoices
from moments.functional import MomentFunctional
from polycore.exceptions import Inconsistent, Underdetermined
from polycore.polynomial import as_rational, monomials_up_to

HALF = Fraction(1, 2)


def rising(value, count):
    """Pochhammer symbol `(value)_count`."""
    result = Fraction(1)
    for step in range(count):
        result *= value + step
    return result


def _require_nonvanishing(value, count, name):
    for step in range(count):
        if value + step == 0:
            raise ValidationError(
                f"Parameter {name} makes the normalization vanish.", code="invalid_parameter"
            )


def ball_moments(mu, cap):
    """
    `(1 - x^2 - y^2)^(mu - 1/2)` on the unit disk: odd moments vanish and
    `μ_{2p,2q} = (1/2)_p (1/2)_q / (mu + 3/2)_{p+q}`.
    """
    mu = as_rational(mu)
    _require_nonvanishing(mu + Fraction(3, 2), cap // 2 + 1, "mu")
    table = {}
    for h, k in monomials_up_to(cap):
        if h % 2 or k % 2:
            table[(h, k)] = Fraction(0)
            continue
        p, q = h // 2, k // 2
        table[(h, k)] = rising(HALF, p) * rising(HALF, q) / rising(mu + Fraction(3, 2), p + q)
    return MomentFunctional(table, cap, MomentProvenanceChoices.CLOSED_FORM)


def simplex_moments(alpha, beta, gamma, cap):
    """
    `x^alpha y^beta (1 - x - y)^gamma` on the triangle:
    `μ_{h,k} = (alpha + 1)_h (beta + 1)_k / (alpha + beta + gamma + 3)_{h+k}`.
    """
    alpha, beta, gamma = as_rational(alpha), as_rational(beta), as_rational(gamma)
    total = alpha + beta + gamma + 3
    _require_nonvanishing(total, cap + 1, "alpha + beta + gamma")
    table = {
        (h, k): rising(alpha + 1, h) * rising(beta + 1, k) / rising(total, h + k)
        for h, k in monomials_up_to(cap)
    }
    return MomentFunctional(table, cap, MomentProvenanceChoices.CLOSED_FORM)


def one_variable_moments(a, d, cap):
    """
    Normalized moments of `⟨u, a m' + d m⟩ = 0` for `m = t^h`:
    `μ_{h+1} = -(h a0 μ_{h-1} + (h a1 + d0) μ_h) / (h a2 + d1)`.

    Args:
    - `a`: Coefficients `(a0, a1, a2)`.
    - `d`: Coefficients `(d0, d1)`.
    - `cap`: Highest moment index.

    Raises:
    - `Underdetermined` / `Inconsistent`: When `h a2 + d1 = 0` leaves `μ_{h+1}` free or conflicts.
    """
    a0, a1, a2 = (as_rational(value) for value in (tuple(a) + (0, 0, 0))[:3])
    d0, d1 = (as_rational(value) for value in (tuple(d) + (0, 0))[:2])
    moments = [Fraction(1)]
    for h in range(cap):
        previous = moments[h - 1] if h >= 1 else Fraction(0)
        numerator = h * a0 * previous + (h * a1 + d0) * moments[h]
        denominator = h * a2 + d1
        if denominator == 0:
            if numerator == 0:
                raise Underdetermined(
                    f"One-variable moment {h + 1} is free.", details={"degree": h + 1}
                )
            raise Inconsistent(
                f"One-variable relations conflict at moment {h + 1}.", details={"degree": h + 1}
            )
        moments.append(-numerator / denominator)
    return moments


def tensor_moments(first, second, cap):
    """Product table `μ_{h,k} = m1_h m2_k` from two `OneVariableFactor` values."""
    left = one_variable_moments(first.a, first.d, cap)
    right = one_variable_moments(second.a, second.d, cap)
    table = {(h, k): left[h] * right[k] for h, k in monomials_up_to(cap)}
    return MomentFunctional(table, cap, MomentProvenanceChoices.CLOSED_FORM)


def closed_form_moments(domain, cap, **params):
    """
    Dispatches to the closed-form providers.

    Args:
    - `domain`: A `ClosedFormDomainChoices` value.
    - `params`: `mu` for the ball; `alpha`, `beta`, `gamma` for the simplex; `first`, `second`
      (`OneVariableFactor`) for tensors.
    """
    if domain == ClosedFormDomainChoices.BALL:
        return ball_moments(params["mu"], cap)
    if domain == ClosedFormDomainChoices.SIMPLEX:
        return simplex_moments(params["alpha"], params["beta"], params["gamma"], cap)
    if domain == ClosedFormDomainChoices.TENSOR:
        return tensor_moments(params["first"], params["second"], cap)
    raise ValidationError(f"Unknown closed-form domain '{domain}'.", code="unknown_family")
