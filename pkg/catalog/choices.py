from django.db import models


class CatalogFamilyChoices(models.TextChoices):
    """
    Built-in families.

    Choices:
    - `KRALL_SHEFFER_INTRIGUING`: Φ = (3y 1; 1 0), Ψ = (-x, -y); ω = exp(y^3 - xy) is not a weight.
    - `BALL`: Unit disk, original Krall-Sheffer form with a diagonal reduction.
    - `SIMPLEX`: Triangle `x, y >= 0`, `x + y <= 1`.
    - `DIAGONAL_DISK`: The disk written directly in diagonal Pearson form.
    - `TENSOR_*`: Products of two one-variable classical families.
    """

    KRALL_SHEFFER_INTRIGUING = "krall-sheffer-intriguing"
    BALL = "ball"
    SIMPLEX = "simplex"
    DIAGONAL_DISK = "diagonal-disk"
    TENSOR_HERMITE_HERMITE = "tensor-hermite-hermite"
    TENSOR_LAGUERRE_JACOBI = "tensor-laguerre-jacobi"
    TENSOR_HERMITE_LAGUERRE = "tensor-hermite-laguerre"
    TENSOR_BESSEL_HERMITE = "tensor-bessel-hermite"


class OneVariableFamilyChoices(models.TextChoices):
    HERMITE = "hermite"
    LAGUERRE = "laguerre"
    JACOBI = "jacobi"
    BESSEL = "bessel"
