from django.db import models

from catalog.managers import FamilyDocumentManager
from catalog.validators import FamilyDocumentValidator


class FamilyDocument(models.Model):
    """
    A user-defined family stored in the family JSON format.

    Attributes:
    - `name` (str): Unique; built-in names are reserved.
    - `description` (str)
    - `document` (dict): The family document; its `name` always mirrors the model's.
    - `created_at` (datetime)
    """

    name = models.CharField(max_length=100, unique=True)
    description = models.TextField(blank=True, default="")
    document = models.JSONField()
    created_at = models.DateTimeField(auto_now_add=True)

    objects = FamilyDocumentManager()

    class Meta:
        ordering = ["name"]

    def clean(self):
        """
        Raises:
        - `ValidationError`: `duplicate_family`, `weight_mismatch` or a document parsing code.
        """
        FamilyDocumentValidator.validate_name(self.name, self.pk)
        if isinstance(self.document, dict):
            self.document = {**self.document, "name": self.name}
            if self.description and not self.document.get("description"):
                self.document["description"] = self.description
        family = FamilyDocumentValidator.validate_document(self.document)
        if not self.description:
            self.description = family.description

    def __str__(self):
        return self.name

    def save(self, *args, **kwargs):
        """
        Overrides the save method to ensure validation before saving.
        """
        self.clean()
        super().save(*args, **kwargs)
