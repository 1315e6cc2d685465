import json
from pathlib import Path

from django.core.exceptions import ValidationError

from polycore.validators import RationalValidator

FAMILY_PARAMETER_FLAGS = ("mu", "alpha", "beta", "gamma")


class CommandValidator:
    """
    Validation helpers for command-line options.

    Methods:
    - `validate_family_source(family, family_file)`: Exactly one of the two must be given.
    - `collect_parameters(options)`: Family parameters given on the command line.
    - `read_json_file(path)`: A JSON document read from disk.
    - `parse_matrix(text)`: A JSON matrix given inline.
    """

    @staticmethod
    def validate_family_source(family, family_file):
        if bool(family) == bool(family_file):
            raise ValidationError(
                "Give exactly one of --family and --family-file.", code="invalid_family_source"
            )

    @staticmethod
    def collect_parameters(options):
        """
        Returns:
        - `{name: Fraction}` for every parameter flag that was given.

        Raises:
        - `ValidationError`: `decimal_rejected` or `invalid_rational`.
        """
        return {
            name: RationalValidator.parse(options[name])
            for name in FAMILY_PARAMETER_FLAGS
            if options.get(name) is not None
        }

    @staticmethod
    def read_json_file(path):
        """
        Raises:
        - `ValidationError`: `unreadable_file` or `invalid_json`.
        """
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise ValidationError(f"Cannot read '{path}': {exc}.", code="unreadable_file")
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"'{path}' is not valid JSON: {exc}.", code="invalid_json")

    @staticmethod
    def parse_matrix(text):
        """
        Parses `--matrix`, e.g. `"[[1, 2], [3, \\"1/2\\"]]"`; entries may be polynomial documents.

        Raises:
        - `ValidationError`: `invalid_json`.
        """
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"--matrix is not valid JSON: {exc}.", code="invalid_json")
