from django.core.exceptions import ValidationError

from polycore.polynomial import to_text


class FamilyValidator:
    """
    Structural checks on the (Φ, Ψ) data of a family.

    Methods:
    - `validate_shapes(phi, psi)`: Φ is 2x2 and Ψ is 2x1.
    - `validate_phi_symmetric(phi)`: Φ[0][1] = Φ[1][0].
    - `validate_degree_bounds(phi, psi)`: deg Φ <= 2 and deg Ψ <= 1.
    - `validate_name(name)`: Non-empty family name.
    """

    @staticmethod
    def validate_shapes(phi, psi):
        if phi.shape != (2, 2):
            raise ValidationError(
                f"Φ must be 2x2, got {phi.rows}x{phi.cols}.", code="invalid_matrix"
            )
        if psi.shape != (2, 1):
            raise ValidationError(
                f"Ψ must have two entries, got {psi.rows}x{psi.cols}.", code="invalid_matrix"
            )

    @staticmethod
    def validate_phi_symmetric(phi):
        """
        Raises:
        - `ValidationError`: `phi_not_symmetric` when the off-diagonal entries differ.
        """
        if phi.entry(0, 1) != phi.entry(1, 0):
            raise ValidationError(
                f"Φ must be symmetric: {to_text(phi.entry(0, 1))} != {to_text(phi.entry(1, 0))}.",
                code="phi_not_symmetric",
            )

    @staticmethod
    def validate_degree_bounds(phi, psi):
        """
        Raises:
        - `ValidationError`: `degree_bound_exceeded` if deg Φ > 2 or deg Ψ > 1.
        """
        if phi.degree > 2:
            raise ValidationError(
                f"Φ has degree {phi.degree}; at most 2 is allowed.",
                code="degree_bound_exceeded",
            )
        if psi.degree > 1:
            raise ValidationError(
                f"Ψ has degree {psi.degree}; at most 1 is allowed.",
                code="degree_bound_exceeded",
            )

    @staticmethod
    def validate_name(name):
        if not isinstance(name, str) or not name.strip():
            raise ValidationError(
                "A family needs a non-empty name.", code="invalid_family_document"
            )
