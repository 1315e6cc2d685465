"""One-variable classical factors used to assemble tensor-product families."""
from fractions import Fraction

from catalog.choices import OneVariableFamilyChoices
from pearson.families import OneVariableFactor
from polycore.polynomial import as_rational, format_rational


def hermite():
    """`a = 1`, `d = -2t`, `ω = exp(-t^2)`."""
    return OneVariableFactor(
        OneVariableFamilyChoices.HERMITE.value, a=(1,), d=(0, -2), exponential=(0, 0, -1)
    )


def laguerre(alpha=0):
    """`a = t`, `d = alpha + 1 - t`, `ω = t^alpha exp(-t)`."""
    alpha = as_rational(alpha)
    return OneVariableFactor(
        f"{OneVariableFamilyChoices.LAGUERRE}({format_rational(alpha)})",
        a=(0, 1),
        d=(alpha + 1, -1),
        exponential=(0, -1),
        factors=(((0, 1), alpha),),
    )


def jacobi(alpha=0, beta=0):
    """`a = 1 - t^2`, `d = beta - alpha - (alpha + beta + 2) t`, `ω = (1 - t)^alpha (1 + t)^beta`."""
    alpha, beta = as_rational(alpha), as_rational(beta)
    return OneVariableFactor(
        f"{OneVariableFamilyChoices.JACOBI}({format_rational(alpha)},{format_rational(beta)})",
        a=(1, 0, -1),
        d=(beta - alpha, -(alpha + beta + 2)),
        factors=(((1, -1), alpha), ((1, 1), beta)),
    )


def bessel(alpha=0):
    """
    `a = t^2`, `d = (alpha + 2) t + 2`. The symmetry factor `t^alpha exp(-2/t)` has no polynomial
    exponential part, so the factor carries no ω and only the weight-free routes apply.
    """
    alpha = as_rational(alpha)
    return OneVariableFactor(
        f"{OneVariableFamilyChoices.BESSEL}({format_rational(alpha)})",
        a=(0, 0, 1),
        d=(Fraction(2), alpha + 2),
        carrier=False,
    )
