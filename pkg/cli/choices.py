from django.db import models


class OutputFormatChoices(models.TextChoices):
    """
    Output formats of the engine commands.

    Choices:
    - `JSON`: Machine-readable documents with rationals as "num/den" strings.
    - `LATEX`: An `align*` block listing `Q_0..Q_N`.
    - `TEXT`: One plain line per degree.
    """

    JSON = "json"
    LATEX = "latex"
    TEXT = "text"


class ExitCodeChoices(models.IntegerChoices):
    """
    Process exit codes of the engine commands.

    Choices:
    - `PASSED`: Everything ran and every check held.
    - `MATH_FAILURE`: A mathematical check or computation failed.
    - `CONFIGURATION_ERROR`: Invalid input (family, parameters, cap, files).
    - `INTERNAL_ERROR`: Anything unexpected.
    - `CONSTRUCTION_FAILURE`: Some `Q_n` could not be built.
    - `ORTHOGONALITY_VIOLATION`: Some `Q_n` is not orthogonal to lower degrees.
    - `RESIDUAL_VIOLATION`: The eigen-system for `Λ_n` has a nonzero residual.

    Example:
        ```
        raise CommandError(message, returncode=ExitCodeChoices.CONFIGURATION_ERROR)
        ```
    """

    PASSED = 0
    MATH_FAILURE = 2
    CONFIGURATION_ERROR = 3
    INTERNAL_ERROR = 4
    CONSTRUCTION_FAILURE = 5
    ORTHOGONALITY_VIOLATION = 6
    RESIDUAL_VIOLATION = 7
