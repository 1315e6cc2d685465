from django.db import models


class MomentProvenanceChoices(models.TextChoices):
    """
    Where a moment table comes from.

    Choices:
    - `PEARSON_RECURRENCE`: Solved degree by degree from the matrix Pearson equation.
    - `CLOSED_FORM`: Beta/Dirichlet product formulas or products of one-variable tables.
    """

    PEARSON_RECURRENCE = "pearson-recurrence"
    CLOSED_FORM = "closed-form"


class ClosedFormDomainChoices(models.TextChoices):
    """
    Domains with closed-form normalized moments.

    Choices:
    - `BALL`: `(1 - x^2 - y^2)^(mu - 1/2)` on the unit disk.
    - `SIMPLEX`: `x^alpha y^beta (1 - x - y)^gamma` on the triangle.
    - `TENSOR`: Product of two one-variable classical functionals.
    """

    BALL = "ball"
    SIMPLEX = "simplex"
    TENSOR = "tensor"
