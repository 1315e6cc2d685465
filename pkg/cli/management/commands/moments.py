from catalog.entries import closed_form_for
from cli.base import EngineCommand
from cli.choices import OutputFormatChoices
from cli.config import RunConfig
from cli.renderers import dump_json, write_output
from moments.pearson_solver import moments_from_pearson
from moments.serializers import MomentFunctionalSerializer
from polycore.polynomial import format_rational


class Command(EngineCommand):
    help = "Dumps the moment table of a family up to a total-degree cap."

    def add_arguments(self, parser):
        self.add_family_arguments(parser)
        parser.add_argument("--cap", type=int, required=True, help="Highest total degree.")
        parser.add_argument(
            "--closed-form",
            action="store_true",
            help="Use the closed-form moments of a built-in family.",
        )
        self.add_output_arguments(parser)

    def run(self, **options):
        config = RunConfig.from_options({**options, "degree": 0})
        if options.get("closed_form"):
            functional = closed_form_for(config.family, config.params, config.cap)
        else:
            functional = moments_from_pearson(config.load_family(), config.cap)
        if config.output_format == OutputFormatChoices.TEXT:
            text = "".join(
                f"mu[{h},{k}] = {format_rational(value)}\n" for h, k, value in functional.table()
            )
        else:
            text = dump_json(MomentFunctionalSerializer(functional).data)
        write_output(self, text, config.out)
