from catalog.entries import closed_form_for
from cli.base import EngineCommand
from cli.choices import ExitCodeChoices, OutputFormatChoices
from cli.config import RunConfig
from cli.renderers import dump_json, render_report_text, write_output
from rodrigues.choices import FailureKindChoices
from rodrigues.latex import render_latex_appendix
from rodrigues.reports import resolve_cap, verify_family
from rodrigues.serializers import VerificationReportSerializer

OUTCOME_EXIT_CODES = {
    FailureKindChoices.CONSTRUCTION: ExitCodeChoices.CONSTRUCTION_FAILURE,
    FailureKindChoices.ORTHOGONALITY: ExitCodeChoices.ORTHOGONALITY_VIOLATION,
    FailureKindChoices.RESIDUAL: ExitCodeChoices.RESIDUAL_VIOLATION,
    FailureKindChoices.MATH: ExitCodeChoices.MATH_FAILURE,
}


class Command(EngineCommand):
    help = "Runs the full verification suite on Q_0..Q_N and writes the report."
    output_formats = tuple(OutputFormatChoices)

    def add_arguments(self, parser):
        self.add_family_arguments(parser)
        parser.add_argument("--degree", type=int, help="Highest degree N.")
        self.add_form_argument(parser)
        parser.add_argument("--cap", type=int, help="Moment cap, at least 2N.")
        parser.add_argument("--workers", type=int, help="Worker processes for the degrees.")
        parser.add_argument(
            "--window", type=int, help="Extra degrees for the distributional identity."
        )
        parser.add_argument(
            "--closed-form",
            action="store_true",
            help="Pair with closed-form moments instead of the Pearson moments.",
        )
        self.add_output_arguments(parser)

    def run(self, **options):
        config = RunConfig.from_options(options)
        family = config.load_family()
        functional = None
        if options.get("closed_form"):
            cap = resolve_cap(config.max_degree, config.cap)
            functional = closed_form_for(config.family, config.params, cap)
        report = verify_family(
            family,
            config.max_degree,
            form=config.form,
            cap=config.cap,
            workers=config.workers,
            functional=functional,
            expectations=config.expectations,
            window=options.get("window"),
        )
        if config.output_format == OutputFormatChoices.LATEX:
            text = render_latex_appendix(report)
        elif config.output_format == OutputFormatChoices.TEXT:
            text = render_report_text(report)
        else:
            text = dump_json(VerificationReportSerializer(report).data)
        write_output(self, text, config.out)

        outcome = report.outcome()
        if outcome is not None:
            self.fail(
                OUTCOME_EXIT_CODES[outcome],
                {
                    "error": f"{outcome}_failure",
                    "message": f"Verification of '{family.name}' failed ({outcome}).",
                    "details": {
                        "failures": [
                            {"kind": str(kind), "message": message}
                            for kind, message in report.failures()
                        ]
                    },
                },
            )
