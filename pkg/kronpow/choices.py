from django.db import models


class RecurrenceVariantChoices(models.TextChoices):
    """
    The two row recurrences that build A^{n} from A^{n-1}.

    Choices:
    - `FIRST`: Rows `0..n-1` use `a00, a01`; the last row uses `a10, a11`.
    - `SECOND`: Row `0` uses `a00, a01`; rows `1..n` use `a10, a11` on the previous row.

    Example:
        ```
        kron_recurrence(A, 4, RecurrenceVariantChoices.SECOND)
        ```
    """

    FIRST = "I"
    SECOND = "II"


class KronPathChoices(models.TextChoices):
    """
    Construction paths for the second-kind Kronecker power, used as mutual oracles.
    """

    EXPLICIT = "explicit"
    RECURRENCE_I = "recurrence-I"
    RECURRENCE_II = "recurrence-II"
