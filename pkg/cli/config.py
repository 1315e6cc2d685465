import logging
from dataclasses import dataclass, field
from typing import Optional

from django.conf import settings

from catalog.entries import expectations_for, resolve
from cli.choices import OutputFormatChoices
from cli.validators import CommandValidator
from pearson.choices import ConstructionFormChoices
from pearson.serializers import parse_family_document
from polycore.validators import RationalValidator

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RunConfig:
    """
    Options of one engine command, validated and with defaults from `settings.BIVARIATE`.

    Attributes:
    - `family` / `family_file`: Exactly one names the family.
    - `params` (dict): Family parameters as `Fraction` values.
    - `max_degree` (int): `N`.
    - `form`: A `ConstructionFormChoices` value.
    - `output_format`: An `OutputFormatChoices` value.
    - `out` (str | None): Output path; stdout when omitted.
    - `cap` (int | None): Moment cap; `2N + CAP_MARGIN` when omitted.
    - `workers` (int): Worker processes for verification.
    - `route` (str | None): Forced construction route.

    Usage:
        ```
        config = RunConfig.from_options(options)
        family = config.load_family()
        ```
    """

    family: Optional[str] = None
    family_file: Optional[str] = None
    params: dict = field(default_factory=dict)
    max_degree: int = 0
    form: str = ConstructionFormChoices.AUTO
    output_format: str = OutputFormatChoices.JSON
    out: Optional[str] = None
    cap: Optional[int] = None
    workers: int = 1
    route: Optional[str] = None

    @classmethod
    def from_options(cls, options):
        """
        Raises:
        - `ValidationError`: `invalid_family_source`, `invalid_degree`, `invalid_cap`,
          `decimal_rejected`, `invalid_rational`.
        """
        bivariate = settings.BIVARIATE
        CommandValidator.validate_family_source(options.get("family"), options.get("family_file"))
        degree = options.get("degree")
        if degree is None:
            degree = bivariate["DEFAULT_MAX_DEGREE"]
        RationalValidator.validate_nonnegative_integer(degree, "degree")
        cap = options.get("cap")
        if cap is not None:
            RationalValidator.validate_nonnegative_integer(cap, "cap", code="invalid_cap")
        workers = options.get("workers") or bivariate["WORKERS"]
        RationalValidator.validate_nonnegative_integer(workers, "workers", code="invalid_workers")
        return cls(
            family=options.get("family"),
            family_file=options.get("family_file"),
            params=CommandValidator.collect_parameters(options),
            max_degree=degree,
            form=options.get("form") or ConstructionFormChoices.AUTO,
            output_format=options.get("format") or OutputFormatChoices.JSON,
            out=options.get("out"),
            cap=cap,
            workers=max(workers, 1),
            route=options.get("route"),
        )

    def load_family(self):
        """The `FamilySpec`: a built-in entry, a stored document, or the `--family-file` document."""
        if self.family_file:
            if self.params:
                logger.warning("Parameter flags are ignored for --family-file")
            return parse_family_document(CommandValidator.read_json_file(self.family_file))
        return resolve(self.family, self.params)

    @property
    def expectations(self):
        return expectations_for(self.family) if self.family else {}
