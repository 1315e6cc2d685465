class AlgebraError(Exception):
    """
    Base class for mathematical failures raised by the engine.

    Every subclass carries a stable `code`, like `ValidationError`.

    Attributes:
    - `code` (str): Machine-readable failure code.
    - `details` (dict): Structured data describing the failure (degrees, offending entries...).
    """

    code = "algebra_error"

    def __init__(self, message, code=None, details=None):
        super().__init__(message)
        self.message = message
        if code is not None:
            self.code = code
        self.details = details or {}

    def as_document(self):
        return {"error": self.code, "message": self.message, "details": self.details}


class NotDivisible(AlgebraError):
    code = "not_divisible"


class DimensionError(AlgebraError):
    code = "dimension_mismatch"


class ShapeError(AlgebraError):
    code = "shape_mismatch"


class MomentCapExceeded(AlgebraError):
    code = "moment_cap_exceeded"


class Underdetermined(AlgebraError):
    code = "underdetermined"


class Inconsistent(AlgebraError):
    code = "inconsistent"


class Unsolvable(AlgebraError):
    code = "unsolvable"


class NonzeroResidual(AlgebraError):
    code = "nonzero_residual"


class ConstructionUnavailable(AlgebraError):
    code = "construction_unavailable"


class DegenerateDeterminant(AlgebraError):
    code = "degenerate_determinant"
