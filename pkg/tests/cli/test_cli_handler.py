"""Tests for the CLI handler."""

import csv
import io
import json
from fractions import Fraction
from typing import Optional

import pytest
from pytest_mock import MockerFixture

from src.cli.argument_parser import parse_arguments
from src.cli.cli_handler import (
    EXIT_FAILURE,
    EXIT_OK,
    EXIT_USAGE,
    CLIHandler,
    build_config,
    build_rule_spec,
)
from src.domain.exceptions.domain_exceptions import (
    ConfigurationException,
    SearchCapExceededException,
)
from src.domain.value_objects.family_tag import FamilyTag
from src.domain.value_objects.rule_variant import RuleVariant
from src.infrastructure.config.settings import OutputFormat, Settings

SHELL_MEASURE = [
    "measure", "--p", "3", "--family", "c", "--rule", "theorem1", "--digits", "101",
    "--range", "1:120",
]  # fmt: skip


def run(argv, settings: Optional[Settings] = None):
    """Run one command line; returns the exit code and stdout."""
    stream = io.StringIO()
    code = CLIHandler(settings or Settings(), stream).handle(parse_arguments(argv))
    return code, stream.getvalue()


class TestBuildConfig:
    """Test cases for build_config and build_rule_spec."""

    def test_measure_defaults_to_Z2(self) -> None:
        """Test measure without --p measures over Z_2."""
        args = parse_arguments(["measure", "--family", "c", "--rule", "zero"])

        config = build_config(args, Settings())

        assert config.prime == 2
        assert config.family is FamilyTag.C

    def test_measure_real_line(self) -> None:
        """Test --p inf selects the real line."""
        args = parse_arguments(
            ["measure", "--p", "inf", "--family", "fa", "--rule", "real-prime", "--x", "1/2"]
        )

        config = build_config(args, Settings())

        assert config.prime is None
        assert config.rule is not None and config.rule.x == Fraction(1, 2)

    def test_construct_cap_is_table_limit(self) -> None:
        """Test --cap bounds the construct table, not the prime search."""
        args = parse_arguments(["construct", "--p", "3", "--rule", "zero", "--cap", "30"])

        config = build_config(args, Settings(cap=5000))

        assert config.table_limit == 30
        assert config.cap == 5000

    def test_verify_cap_and_range(self) -> None:
        """Test --cap is the prime search cap and --range reaches the checks."""
        args = parse_arguments(
            ["verify", "--check", "strict-bridge", "--cap", "999", "--range", "5:60"]
        )

        config = build_config(args, Settings())

        assert config.cap == 999
        assert config.check_parameters.start == 5
        assert config.check_parameters.stop == 60

    def test_verify_without_range(self) -> None:
        """Test the check keeps its own stop without --range."""
        config = build_config(parse_arguments(["verify"]), Settings())

        assert config.check_parameters.stop is None

    def test_depth_from_settings(self) -> None:
        """Test PADIC_DS_DEPTH fills in a missing --depth."""
        args = parse_arguments(["construct", "--p", "2", "--rule", "theorem2", "--x", "1/4"])

        config = build_config(args, Settings(depth=6))

        assert config.rule is not None and config.rule.depth == 6

    def test_primed_rule(self) -> None:
        """Test --base builds the nested request."""
        args = parse_arguments(
            ["construct", "--p", "3", "--rule", "primed", "--base", "theorem1", "--digits", "1"]
        )

        spec = build_rule_spec(args, 3, 8)

        assert spec is not None and spec.variant is RuleVariant.PRIMED
        assert spec.base is not None and spec.base.variant is RuleVariant.THEOREM1

    @pytest.mark.parametrize(
        "argv",
        [
            ["construct", "--p", "3", "--rule", "primed"],
            ["construct", "--p", "3", "--rule", "primed", "--base", "primed"],
            ["construct", "--p", "3", "--rule", "nonsense"],
            ["construct", "--p", "inf", "--rule", "zero"],
            ["spectrum", "--p", "inf", "--x", "1/2"],
            ["measure", "--family", "z", "--rule", "zero"],
            ["measure", "--family", "c", "--rule", "zero", "--range", "9:3"],
        ],
    )
    def test_configuration_errors(self, argv) -> None:
        """Test inconsistent flags are configuration errors."""
        with pytest.raises(ConfigurationException):
            build_config(parse_arguments(argv), Settings())

    def test_format(self) -> None:
        """Test the output format enum."""
        config = build_config(parse_arguments(["--format", "table", "verify"]), Settings())

        assert config.output_format is OutputFormat.TABLE


class TestCLIHandler:
    """Test cases for CLIHandler.handle."""

    def test_construct_csv(self) -> None:
        """Test the construct table as CSV."""
        code, out = run(
            ["construct", "--p", "3", "--rule", "theorem1", "--digits", "101", "--cap", "50",
             "--format", "csv"]
        )  # fmt: skip

        assert code == EXIT_OK
        rows = list(csv.DictReader(io.StringIO(out)))
        assert rows[0] == {"n": "2", "psi_num": "2", "psi_den": "3", "part": "shell-0"}

    def test_measure_json(self) -> None:
        """Test the measure document with its shell table."""
        code, out = run(SHELL_MEASURE + ["--shells", "3"])

        assert code == EXIT_OK
        document = json.loads(out)
        assert document["measure"] == "20/27"
        assert document["p"] == "3"
        assert document["range"] == [1, 120]
        assert [s["status"] for s in document["shells"]] == ["full", "0", "full", "0"]
        assert document["residual"] == "0/1"
        assert document["critical_level"] == "inf"

    def test_measure_approx(self) -> None:
        """Test --approx adds decimal hints."""
        _, out = run(SHELL_MEASURE + ["--approx"])

        assert json.loads(out)["measure_approx"] == "0.740740740740"

    def test_measure_csv_rows(self) -> None:
        """Test CSV measure output lists the stages."""
        code, out = run(SHELL_MEASURE + ["--format", "csv"])

        assert code == EXIT_OK
        rows = list(csv.DictReader(io.StringIO(out)))
        assert list(rows[0]) == ["n", "psi_num", "psi_den", "measure_num", "measure_den"]
        assert [row["n"] for row in rows] == sorted((row["n"] for row in rows), key=int)

    def test_real_line(self) -> None:
        """Test the real unit interval measure."""
        code, out = run(
            ["measure", "--p", "inf", "--family", "fa", "--rule", "real-prime", "--x", "1/2",
             "--range", "3:50"]
        )  # fmt: skip

        assert code == EXIT_OK
        document = json.loads(out)
        assert document["p"] == "inf"
        assert document["measure"] == "5/6"

    def test_spectrum(self) -> None:
        """Test 1/2 is not a C measure over Z_3."""
        code, out = run(["spectrum", "--p", "3", "--x", "1/2"])

        assert code == EXIT_OK
        document = json.loads(out)
        assert document["member"] is False
        assert document["digits"] == "(0,2)"

    def test_verify_pass(self) -> None:
        """Test a passing single check exits 0."""
        code, out = run(
            ["verify", "--check", "lemma-haynes", "--p", "3", "--n", "5", "--psi", "21/5"]
        )

        assert code == EXIT_OK
        document = json.loads(out)
        assert document["verdict"] == "pass"
        assert document["checks"][0]["check"] == "lemma-haynes"

    def test_verify_fail(self) -> None:
        """Test a failing check exits 1 and still prints its report."""
        code, out = run(
            ["verify", "--check", "case-identities", "--p", "5", "--x", "1/5", "--depth", "4",
             "--format", "table"]
        )  # fmt: skip

        assert code == EXIT_FAILURE
        assert "case-identities" in out
        assert "fail" in out

    def test_unknown_check(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test an unknown check is a usage error."""
        code, _ = run(["verify", "--check", "theorem3"])

        assert code == EXIT_USAGE
        assert "Unknown check" in capsys.readouterr().err

    def test_missing_rule(self) -> None:
        """Test measure without --rule is a usage error."""
        code, out = run(["measure", "--family", "c"])

        assert code == EXIT_USAGE
        assert out == ""

    def test_invalid_digits(self) -> None:
        """Test non-binary shell digits are a usage error."""
        code, _ = run(["construct", "--p", "3", "--rule", "theorem1", "--digits", "12"])

        assert code == EXIT_USAGE

    def test_bad_environment(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test a malformed environment variable is a usage error."""
        monkeypatch.setenv("PADIC_DS_DEPTH", "deep")
        stream = io.StringIO()

        code = CLIHandler(stream=stream).handle(parse_arguments(["verify", "--check", "generator"]))

        assert code == EXIT_USAGE

    def test_computation_error(self, mocker: MockerFixture) -> None:
        """Test other library errors exit 1."""
        mocker.patch(
            "src.cli.cli_handler.MeasureFamilyUseCase.execute_witnesses",
            side_effect=SearchCapExceededException("no prime below 100"),
        )

        code, _ = run(
            ["measure", "--p", "2", "--family", "fa", "--rule", "theorem2", "--x", "1/4",
             "--witnesses"]
        )  # fmt: skip

        assert code == EXIT_FAILURE

    def test_deterministic(self) -> None:
        """Test repeated runs print identical bytes."""
        assert run(SHELL_MEASURE) == run(SHELL_MEASURE)

    def test_parallel_matches_serial(self) -> None:
        """Test worker processes never change the output."""
        assert run(SHELL_MEASURE + ["--parallel", "2"]) == run(SHELL_MEASURE)
