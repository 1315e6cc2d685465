from django.core.exceptions import ValidationError

from catalog.choices import CatalogFamilyChoices
from polycore.validators import RationalValidator


class CatalogValidator:
    """
    Validates catalog lookups and their parameters.

    Methods:
    - `validate_family_name(name)`: The name is a built-in family.
    - `validate_parameters(entry, params)`: Every parameter is known, present and in its domain.
    """

    @staticmethod
    def validate_family_name(name):
        """
        Raises:
        - `ValidationError`: `unknown_family`.
        """
        if name not in CatalogFamilyChoices.values:
            raise ValidationError(f"Unknown family '{name}'.", code="unknown_family")

    @staticmethod
    def validate_parameters(entry, params):
        """
        Resolves `params` against the entry's domains, filling in defaults.

        Args:
        - `entry`: A `CatalogEntry`.
        - `params`: Mapping of names to rationals or "p/q" strings.

        Returns:
        - A dict of `Fraction` values.

        Raises:
        - `ValidationError`: `invalid_parameter`, `missing_parameter`, `decimal_rejected`.
        """
        params = dict(params or {})
        known = {domain.name for domain in entry.parameters}
        unknown = sorted(set(params) - known)
        if unknown:
            raise ValidationError(
                f"Family '{entry.name}' takes no parameter {', '.join(unknown)}.",
                code="invalid_parameter",
            )
        resolved = {}
        for domain in entry.parameters:
            if params.get(domain.name) is None:
                if domain.default is None:
                    raise ValidationError(
                        f"Family '{entry.name}' needs the parameter '{domain.name}'.",
                        code="missing_parameter",
                    )
                resolved[domain.name] = domain.default
                continue
            value = RationalValidator.parse(params[domain.name])
            domain.validate(value)
            resolved[domain.name] = value
        return resolved


class FamilyDocumentValidator:
    """
    Validation for stored user families.

    Methods:
    - `validate_name(name, pk)`: Not a built-in name and not stored twice.
    - `validate_document(document)`: Parses, and the symmetry factor matches every carried form.
    """

    @staticmethod
    def validate_name(name, pk=None):
        """
        Raises:
        - `ValidationError`: `duplicate_family` if the name is built in or already stored,
          `invalid_family_document` if it is empty.
        """
        from catalog.models import FamilyDocument

        if not name:
            raise ValidationError(
                "A stored family needs a name.", code="invalid_family_document"
            )
        if name in CatalogFamilyChoices.values:
            raise ValidationError(
                f"'{name}' is a built-in family name.", code="duplicate_family"
            )
        if FamilyDocument.objects.filter(name=name).exclude(pk=pk).exists():
            raise ValidationError(
                f"A family named '{name}' is already stored.", code="duplicate_family"
            )

    @staticmethod
    def validate_document(document):
        """
        Returns:
        - The parsed `FamilySpec`.

        Raises:
        - `ValidationError`: The parser's code, or `weight_mismatch` when ω does not solve the
          Pearson equation of a form that carries it.
        """
        from pearson.serializers import parse_family_document
        from pearson.symmetry import verify_symmetry_factor

        family = parse_family_document(document)
        for choice in family.available_forms():
            form = family.form(choice)
            report = verify_symmetry_factor(form)
            if report.checked and not report.holds:
                raise ValidationError(
                    f"The symmetry factor does not solve the {choice} Pearson equation "
                    f"(residuals {report.residuals}).",
                    code="weight_mismatch",
                )
        return family
