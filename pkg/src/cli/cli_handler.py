"""CLI handler: builds the configuration, runs a use case and renders its report."""

import logging
import sys
from typing import Optional, TextIO

from src.application.dtos.check_parameters_dto import CheckParametersDTO
from src.application.dtos.rule_spec_dto import RuleSpecDTO
from src.application.use_cases.construct_psi_use_case import ConstructPsiUseCase
from src.application.use_cases.measure_family_use_case import MeasureFamilyUseCase
from src.application.use_cases.spectrum_membership_use_case import SpectrumMembershipUseCase
from src.application.use_cases.verify_claims_use_case import VerifyClaimsUseCase
from src.cli.argument_parser import CLIArguments
from src.domain.exceptions.domain_exceptions import (
    ConfigurationException,
    InvalidDigitsException,
    InvalidInputException,
    OutOfRangeException,
    PadicDSException,
)
from src.domain.value_objects.family_tag import FamilyTag
from src.domain.value_objects.rule_variant import RuleVariant
from src.infrastructure.config.settings import (
    DEFAULT_MEASURE_PRIME,
    DEFAULT_TABLE_LIMIT,
    REAL_LINE,
    Config,
    OutputFormat,
    Settings,
    parse_prime,
    parse_range,
    parse_rational,
    parse_table,
)
from src.infrastructure.parallel.job_runners import runner_for
from src.infrastructure.persistence.report_writers import writer_for

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

# Errors caused by what was typed rather than by the computation.
USAGE_ERRORS = (
    ConfigurationException,
    InvalidInputException,
    InvalidDigitsException,
    OutOfRangeException,
)


def _variant(token: str, flag: str) -> RuleVariant:
    try:
        return RuleVariant.from_token(token)
    except ValueError as e:
        raise ConfigurationException(f"{flag}: {e}") from e


def _family(token: Optional[str]) -> Optional[FamilyTag]:
    if token is None:
        return None
    try:
        return FamilyTag.from_token(token)
    except ValueError as e:
        raise ConfigurationException(f"--family: {e}") from e


def build_rule_spec(args: CLIArguments, prime: Optional[int], depth: int) -> Optional[RuleSpecDTO]:
    """Rule request from ``--rule`` and its parameter flags; None without ``--rule``.

    Raises:
        ConfigurationException: If a token or rational does not parse
    """
    if args.rule is None:
        return None
    variant = _variant(args.rule, "--rule")
    x = parse_rational(args.x, "--x") if args.x is not None else None
    table = parse_table(args.table) if args.table else ()

    def spec(v: RuleVariant, base: Optional[RuleSpecDTO] = None) -> RuleSpecDTO:
        return RuleSpecDTO(
            variant=v,
            prime=prime,
            digits=args.digits,
            x=x,
            depth=depth,
            table=table,
            full_support=args.full_support,
            base=base,
        )

    if variant is not RuleVariant.PRIMED:
        return spec(variant)
    if args.base is None:
        raise ConfigurationException("--rule primed needs --base")
    base = _variant(args.base, "--base")
    if base is RuleVariant.PRIMED:
        raise ConfigurationException("--base cannot itself be primed")
    return spec(variant, spec(base))


def build_config(args: CLIArguments, settings: Settings) -> Config:
    """Validated configuration for one subcommand.

    ``measure`` without ``--p`` measures over Z_2; ``--p inf`` selects the real
    unit interval. For ``construct``, ``--cap`` bounds the tabulated support;
    everywhere else it caps prime searches.

    Raises:
        ConfigurationException: If any flag is malformed or inconsistent
    """
    if args.command == "measure" and args.p is None:
        prime = DEFAULT_MEASURE_PRIME
    else:
        prime = parse_prime(args.p)
    if args.command in ("construct", "spectrum") and args.p is not None and prime is None:
        raise ConfigurationException(f"'{args.command}' has no '{REAL_LINE}' version")
    depth = args.depth if args.depth is not None else settings.depth
    start, stop = parse_range(args.range)
    rule = build_rule_spec(args, prime, depth)

    if args.command == "construct":
        table_limit = args.cap if args.cap is not None else DEFAULT_TABLE_LIMIT
        cap = settings.cap
    else:
        table_limit = DEFAULT_TABLE_LIMIT
        cap = args.cap if args.cap is not None else settings.cap

    check_parameters = CheckParametersDTO()
    if args.command == "verify":
        check_parameters = CheckParametersDTO(
            p=prime,
            n=args.n,
            psi=parse_rational(args.psi, "--psi") if args.psi is not None else None,
            x=parse_rational(args.x, "--x") if args.x is not None else None,
            q=args.q,
            k=args.k,
            max_n=args.max_n,
            max_span=args.max_span,
            max_depth=args.max_depth,
            k_max=args.k_max,
            samples=args.samples,
            seed=args.seed,
            depth=args.depth,
            digits=args.digits,
            start=start,
            stop=stop if args.range else None,
            rule=rule,
            cap=args.cap,
        )

    return Config(
        command=args.command,
        prime=prime,
        family=_family(args.family),
        rule=rule,
        start=start,
        stop=stop,
        depth=depth,
        cap=cap,
        table_limit=table_limit,
        output_format=OutputFormat(args.output_format),
        parallel=args.parallel,
        approx=args.approx,
        witnesses=args.witnesses,
        shells=args.shells,
        x=parse_rational(args.x, "--x") if args.x is not None else None,
        check=args.check or "all",
        check_parameters=check_parameters,
    )


class CLIHandler:
    """Handler for the four subcommands."""

    def __init__(
        self, settings: Optional[Settings] = None, stream: Optional[TextIO] = None
    ) -> None:
        """Initialize CLI handler.

        Args:
            settings: Environment defaults; read from the environment when None
            stream: Report destination; stdout when None
        """
        self._settings = settings
        self._stream = stream

    def handle(self, args: CLIArguments) -> int:
        """Handle CLI command.

        Args:
            args: Parsed CLI arguments

        Returns:
            0 on success, 1 for a computation error or failing verdict,
            2 for a usage or configuration error
        """
        try:
            settings = self._settings or Settings.from_env()
            config = build_config(args, settings)
            logger.debug("Configuration: %s", config)
            handlers = {
                "construct": self._construct,
                "measure": self._measure,
                "verify": self._verify,
                "spectrum": self._spectrum,
            }
            return handlers[config.command](config)
        except USAGE_ERRORS as e:
            print(f"Error: {e}", file=sys.stderr)
            return EXIT_USAGE
        except PadicDSException as e:
            print(f"Error: {e}", file=sys.stderr)
            return EXIT_FAILURE

    @property
    def stream(self) -> TextIO:
        """Where reports go."""
        return self._stream if self._stream is not None else sys.stdout

    def _construct(self, config: Config) -> int:
        assert config.rule is not None
        rows = ConstructPsiUseCase().execute(config.rule, config.table_limit)
        writer = writer_for(config.output_format, config.approx)
        writer.write_rows([row.to_row() for row in rows], self.stream)
        return EXIT_OK

    def _measure(self, config: Config) -> int:
        assert config.family is not None and config.rule is not None
        use_case = MeasureFamilyUseCase(runner_for(config.parallel))
        if config.witnesses:
            assert config.prime is not None
            report = use_case.execute_witnesses(
                config.family, config.prime, config.rule, config.shells, config.cap
            )
        else:
            report = use_case.execute(
                config.family, config.prime, config.rule, config.start, config.stop, config.shells
            )
        writer = writer_for(config.output_format, config.approx)
        if config.output_format is OutputFormat.CSV:
            writer.write_rows(report.to_rows(), self.stream)
        else:
            writer.write_document(report.to_document(), self.stream)
        return EXIT_OK

    def _verify(self, config: Config) -> int:
        use_case = VerifyClaimsUseCase(runner_for(config.parallel), config.cap)
        summary = use_case.execute(config.check, config.check_parameters)
        writer = writer_for(config.output_format, config.approx)
        if config.output_format is OutputFormat.JSON:
            writer.write_document(summary.to_document(), self.stream)
        else:
            writer.write_rows(summary.to_rows(), self.stream)
        if not summary.passed:
            failed = [check.name for check in summary.checks if not check.passed]
            logger.warning("Failing checks: %s", ", ".join(failed))
            return EXIT_FAILURE
        return EXIT_OK

    def _spectrum(self, config: Config) -> int:
        assert config.prime is not None and config.x is not None and config.family is not None
        result = SpectrumMembershipUseCase().execute(config.prime, config.x, config.family)
        writer_for(config.output_format, config.approx).write_document(
            result.to_document(), self.stream
        )
        return EXIT_OK
