from django.core.exceptions import ValidationError
from django.db import models

from pearson.serializers import parse_family_document


class FamilyDocumentManager(models.Manager):
    """
    Manager for stored user families.

    Methods:
    - `get_family(name)`: The parsed `FamilySpec` of a stored document.
    - `names()`: Stored family names in alphabetical order.

    Example:
        ```
        class FamilyDocument(models.Model):
            objects = FamilyDocumentManager()
        ```
    """

    def get_family(self, name):
        """
        Raises:
        - `ValidationError`: `unknown_family` when nothing is stored under `name`.
        """
        try:
            stored = self.get(name=name)
        except self.model.DoesNotExist:
            raise ValidationError(f"Unknown family '{name}'.", code="unknown_family")
        return parse_family_document(stored.document)

    def names(self):
        return list(self.order_by("name").values_list("name", flat=True))
