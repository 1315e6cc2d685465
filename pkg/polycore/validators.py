import re
from fractions import Fraction

from django.core.exceptions import ValidationError

_RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")
_DECIMAL_PATTERN = re.compile(r"^\s*[+-]?(\d+\.\d*|\.\d+|\d+(\.\d*)?[eE][+-]?\d+)\s*$")


class RationalValidator:
    """
    Parses exact rational input coming from JSON documents and the command line.

    Methods:
    - `parse(value)`: Returns a `Fraction` for integers, `Fraction` values and "p/q" strings.
    - `validate_nonnegative_integer(value, name)`: Validates degrees, caps and exponents.
    """

    @staticmethod
    def parse(value):
        """
        Converts `value` to an exact `Fraction`.

        Args:
        - `value`: An `int`, a `Fraction` or a string such as "3", "-1/2".

        Raises:
        - `ValidationError`: `decimal_rejected` for floats and decimal strings,
          `invalid_rational` for anything else that is not an exact rational.
        """
        if isinstance(value, bool):
            raise ValidationError(f"Invalid rational: {value!r}.", code="invalid_rational")
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, float):
            raise ValidationError(
                f"Decimal value {value!r} rejected; write rationals as 'p/q'.",
                code="decimal_rejected",
            )
        if isinstance(value, str):
            if _DECIMAL_PATTERN.match(value):
                raise ValidationError(
                    f"Decimal value '{value}' rejected; write rationals as 'p/q'.",
                    code="decimal_rejected",
                )
            match = _RATIONAL_PATTERN.match(value)
            if match:
                numerator, denominator = match.groups()
                if denominator is not None and int(denominator) == 0:
                    raise ValidationError(
                        f"Zero denominator in '{value}'.", code="invalid_rational"
                    )
                return Fraction(int(numerator), int(denominator or 1))
        raise ValidationError(f"Invalid rational: {value!r}.", code="invalid_rational")

    @staticmethod
    def validate_nonnegative_integer(value, name, code="invalid_degree"):
        if isinstance(value, bool) or not isinstance(value, int) or value < 0:
            raise ValidationError(
                f"'{name}' must be a nonnegative integer, got {value!r}.", code=code
            )
        return value


class TermValidator:
    @staticmethod
    def validate_term(term):
        """
        Validates one `[h, k, "num/den"]` entry of a serialized polynomial.

        Returns:
        - The tuple `(h, k, Fraction)`.

        Raises:
        - `ValidationError`: `invalid_term` for malformed exponents or shape; coefficient errors
          propagate from `RationalValidator.parse`.
        """
        if not isinstance(term, (list, tuple)) or len(term) != 3:
            raise ValidationError(
                f"A term must be [h, k, coefficient], got {term!r}.", code="invalid_term"
            )
        h, k, coefficient = term
        for exponent in (h, k):
            if isinstance(exponent, bool) or not isinstance(exponent, int) or exponent < 0:
                raise ValidationError(
                    f"Exponents must be nonnegative integers, got {term!r}.",
                    code="invalid_term",
                )
        return h, k, RationalValidator.parse(coefficient)
