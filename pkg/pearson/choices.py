from django.db import models


class ConstructionFormChoices(models.TextChoices):
    """
    Which (Φ, Ψ, ω) triple of a family a construction runs on.

    Choices:
    - `AUTO`: The original form when condition (R) holds there, else the diagonal reduction.
    - `ORIGINAL`: The family's own Φ and Ψ.
    - `DIAGONAL`: The diagonal reduction Φ' = diag(p, q).

    Example:
        ```
        build_Q(family, 3, ConstructionFormChoices.DIAGONAL)
        ```
    """

    AUTO = "auto"
    ORIGINAL = "original"
    DIAGONAL = "diagonal"
