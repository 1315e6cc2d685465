from django.db import models


class RouteChoices(models.TextChoices):
    """
    Independent ways of computing Q_n.

    Choices:
    - `CARRIER`: `ω^{-1} div^{n}(Φ^{n} ω)` in carrier calculus with a final exact division.
    - `REDUCTION`: The ω-free descent `A_n = I, ..., A_0 = Q_n^t`; needs condition (R).
    - `MOMENT`: Solves `Q_n^t u = div^{n}(Φ^{n} u)` against the moment matrix; needs det M_n != 0.
    """

    CARRIER = "carrier"
    REDUCTION = "reduction"
    MOMENT = "moment"


class LambdaShapeChoices(models.TextChoices):
    """
    Shape of the eigen-matrix Λ_n.

    Choices:
    - `SCALAR`: A multiple of the identity (Krall-Sheffer type operators).
    - `DIAGONAL`: Diagonal but not scalar (tensor products).
    - `GENERAL`: Anything else.
    """

    SCALAR = "scalar"
    DIAGONAL = "diagonal"
    GENERAL = "general"


class FailureKindChoices(models.TextChoices):
    """Categories of verification failures, ordered by how they map to exit codes."""

    CONSTRUCTION = "construction"
    ORTHOGONALITY = "orthogonality"
    RESIDUAL = "residual"
    MATH = "math"
