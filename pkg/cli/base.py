import json
import logging

from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError

from cli.choices import ExitCodeChoices, OutputFormatChoices
from cli.validators import FAMILY_PARAMETER_FLAGS
from pearson.choices import ConstructionFormChoices
from polycore.exceptions import (
    AlgebraError,
    ConstructionUnavailable,
    DimensionError,
    MomentCapExceeded,
    NonzeroResidual,
    NotDivisible,
    ShapeError,
)

logger = logging.getLogger(__name__)

_CONFIGURATION_ERRORS = (MomentCapExceeded, DimensionError, ShapeError)
_CONSTRUCTION_ERRORS = (NotDivisible, ConstructionUnavailable)


def exit_code_for(exc):
    """
    Maps an exception to its `ExitCodeChoices` value.

    Returns:
    - `CONFIGURATION_ERROR` for validation errors, cap and shape errors.
    - `CONSTRUCTION_FAILURE`, `RESIDUAL_VIOLATION` or `MATH_FAILURE` for engine errors.
    - `INTERNAL_ERROR` for anything else.
    """
    if isinstance(exc, ValidationError) or isinstance(exc, _CONFIGURATION_ERRORS):
        return ExitCodeChoices.CONFIGURATION_ERROR
    if isinstance(exc, _CONSTRUCTION_ERRORS):
        return ExitCodeChoices.CONSTRUCTION_FAILURE
    if isinstance(exc, NonzeroResidual):
        return ExitCodeChoices.RESIDUAL_VIOLATION
    if isinstance(exc, AlgebraError):
        return ExitCodeChoices.MATH_FAILURE
    return ExitCodeChoices.INTERNAL_ERROR


def error_document(exc):
    """`{"error": code, "message": ..., "details": {...}}` for any exception."""
    if isinstance(exc, AlgebraError):
        return exc.as_document()
    if isinstance(exc, ValidationError):
        return {
            "error": getattr(exc, "code", None) or "invalid",
            "message": exc.messages[0],
            "details": dict(getattr(exc, "params", None) or {}),
        }
    return {
        "error": "internal_error",
        "message": str(exc),
        "details": {"type": type(exc).__name__},
    }


class EngineCommand(BaseCommand):
    """
    Base class of the engine commands.

    Subclasses implement `run(**options)`. Every error leaves as a `CommandError` whose
    `returncode` follows `ExitCodeChoices`, after a one-line error JSON is written to stderr.

    Usage:
        ```
        class Command(EngineCommand):
            def run(self, **options):
                ...
        ```
    """

    output_formats = (OutputFormatChoices.JSON, OutputFormatChoices.TEXT)

    def add_family_arguments(self, parser):
        parser.add_argument("--family", help="Built-in or stored family name.")
        parser.add_argument("--family-file", help="Path to a family JSON document.")
        for name in FAMILY_PARAMETER_FLAGS:
            parser.add_argument(f"--{name}", help=f"Family parameter {name} as 'p/q'.")

    def add_form_argument(self, parser):
        parser.add_argument(
            "--form",
            choices=ConstructionFormChoices.values,
            default=ConstructionFormChoices.AUTO,
        )

    def add_output_arguments(self, parser):
        parser.add_argument(
            "--format",
            choices=[str(choice) for choice in self.output_formats],
            default=OutputFormatChoices.JSON,
        )
        parser.add_argument("--out", help="Output path; stdout when omitted.")

    def handle(self, *args, **options):
        try:
            self.run(*args, **options)
        except CommandError:
            raise
        except Exception as exc:
            returncode = exit_code_for(exc)
            if returncode == ExitCodeChoices.INTERNAL_ERROR:
                logger.exception("Unexpected failure in '%s'", self.__module__)
            self.fail(returncode, error_document(exc))

    def fail(self, returncode, document):
        self.stderr.write(json.dumps(document, sort_keys=True, ensure_ascii=False))
        raise CommandError(document["message"], returncode=int(returncode))

    def run(self, *args, **options):
        raise NotImplementedError("Engine commands implement run().")
