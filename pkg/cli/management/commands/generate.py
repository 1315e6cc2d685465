from cli.base import EngineCommand
from cli.choices import OutputFormatChoices
from cli.config import RunConfig
from cli.renderers import render_vectors, write_output
from moments.pearson_solver import moments_from_pearson
from rodrigues.choices import RouteChoices
from rodrigues.construction import build_sequence, default_route, resolve_form
from rodrigues.reports import resolve_cap
from rodrigues.serializers import RodriguesVectorSerializer


class Command(EngineCommand):
    help = "Builds the Rodrigues vectors Q_0..Q_N of a family."
    output_formats = tuple(OutputFormatChoices)

    def add_arguments(self, parser):
        self.add_family_arguments(parser)
        parser.add_argument("--degree", type=int, help="Highest degree N.")
        self.add_form_argument(parser)
        parser.add_argument("--route", choices=RouteChoices.values)
        parser.add_argument("--cap", type=int, help="Moment cap for the moment route.")
        self.add_output_arguments(parser)

    def run(self, **options):
        config = RunConfig.from_options(options)
        family = config.load_family()
        choice, _ = resolve_form(family, config.form)
        route = config.route or default_route(family, choice)
        functional = None
        if route == RouteChoices.MOMENT:
            functional = moments_from_pearson(family, resolve_cap(config.max_degree, config.cap))
        vectors = build_sequence(family, config.max_degree, choice, route, functional)
        document = {
            "family": family.name,
            "form": str(choice),
            "route": str(route),
            "max_degree": config.max_degree,
            "polynomials": RodriguesVectorSerializer(vectors, many=True).data,
        }
        write_output(self, render_vectors(vectors, config.output_format, document), config.out)
