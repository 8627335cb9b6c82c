"""Tests for biuniv.helpers.cli_helper module."""

import click
import pytest
from click.testing import CliRunner

from biuniv.config import TestingConfig
from biuniv.helpers.cli_helper import build_run_config, run_options, write_output
from biuniv.helpers.error import ConfigurationError


class TestRunOptions:

    def test_options_reach_command(self):
        @click.command()
        @run_options
        def show(**options):
            click.echo(sorted(key for key, value in options.items() if value is not None))

        result = CliRunner().invoke(show, ["--lambda", "0.5", "--format", "csv"])
        assert result.exit_code == 0
        assert "'format_'" in result.stdout
        assert "'lambda_'" in result.stdout
        assert "'output'" in result.stdout

    def test_bad_choice(self):
        @click.command()
        @run_options
        def show(**options):
            click.echo(options)

        result = CliRunner().invoke(show, ["--phi-kind", "cubic"])
        assert result.exit_code == 2


class TestBuildRunConfig:

    def test_maps_option_names(self):
        run = build_run_config(TestingConfig, "bounds", {"lambda_": 0.25, "beta": 0.5, "format_": "csv"})
        assert run.lam == 0.25
        assert run.beta == 0.5
        assert run.format == "csv"
        assert run.output == "-"

    def test_invalid(self):
        with pytest.raises(ConfigurationError):
            build_run_config(TestingConfig, "bounds", {"lambda_": 0.25})


class TestWriteOutput:

    def test_stdout(self, capsys):
        write_output("a,b\n", "-")
        assert capsys.readouterr().out == "a,b\n"

    def test_file(self, tmp_path):
        target = tmp_path / "report.csv"
        write_output("a,b\n1,2\n", str(target))
        assert target.read_bytes() == b"a,b\n1,2\n"

    def test_unwritable(self, tmp_path):
        with pytest.raises(ConfigurationError, match="cannot write output"):
            write_output("x", str(tmp_path / "missing" / "report.csv"))
