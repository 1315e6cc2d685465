from django.db import models


class AxisChoices(models.TextChoices):
    """
    The two coordinate directions of the plane.

    Choices:
    - `X`: Differentiate or act along x.
    - `Y`: Differentiate or act along y.
    """

    X = "x"
    Y = "y"
