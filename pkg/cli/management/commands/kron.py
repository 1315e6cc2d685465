from django.core.exceptions import ValidationError

from cli.base import EngineCommand
from cli.choices import OutputFormatChoices
from cli.renderers import dump_json, write_output
from cli.validators import CommandValidator
from kronpow.choices import KronPathChoices
from kronpow.kronecker import kron_by_path
from kronpow.serializers import KronMatrixSerializer, KronRequestSerializer
from polycore.polynomial import to_text
from polycore.serializers import first_error_code


class Command(EngineCommand):
    help = "Prints the second-kind Kronecker power A^{n} of a 2x2 matrix."

    def add_arguments(self, parser):
        parser.add_argument("--n", type=int, required=True, help="The power n.")
        parser.add_argument(
            "--matrix", required=True, help='JSON 2x2 matrix, e.g. "[[1, 2], [3, 4]]".'
        )
        parser.add_argument(
            "--path", choices=KronPathChoices.values, default=KronPathChoices.RECURRENCE_I
        )
        self.add_output_arguments(parser)

    def run(self, **options):
        request = KronRequestSerializer(
            data={
                "matrix": CommandValidator.parse_matrix(options["matrix"]),
                "n": options["n"],
                "path": options["path"],
            }
        )
        if not request.is_valid():
            raise ValidationError(
                f"Invalid Kronecker request: {request.errors}",
                code=first_error_code(request.errors) or "invalid_matrix",
            )
        data = request.validated_data
        power = kron_by_path(data["matrix"], data["n"], data["path"])
        rows = [[to_text(entry) for entry in row] for row in power.body.entries()]
        if options["format"] == OutputFormatChoices.TEXT:
            text = "\n".join("[" + ", ".join(row) + "]" for row in rows) + "\n"
        else:
            text = dump_json({**KronMatrixSerializer(power).data, "text": rows})
        write_output(self, text, options.get("out"))
