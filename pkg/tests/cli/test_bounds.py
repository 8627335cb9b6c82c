"""Tests for the bounds command."""

import json

from manage import cli


class TestBoundsJson:

    def test_origin(self, runner):
        result = runner.invoke(cli, ["bounds", "--lambda", "0", "--beta", "0"])
        assert result.exit_code == 0, result.stderr
        report = json.loads(result.stdout)
        assert report["hankel2_bound"] == 1.5
        assert report["branches"]["hankel2_bound"] == "boundary-case"
        assert report["phi"]["kind"] == "linear-order"
        assert report["subcase"] == "monotone"

    def test_special_phi(self, runner):
        result = runner.invoke(cli, ["bounds", "--lambda", "1", "--beta", "0",
                                     "--phi-kind", "linear", "--phi-param", "0"])
        assert result.exit_code == 0, result.stderr
        report = json.loads(result.stdout)
        assert report["fekete_functional_bound"] == 0.333333333333
        assert report["delta"] == 0.666666666667
        assert report["hankel2_bound"] == 0.333333333333

    def test_thresholds(self, runner):
        result = runner.invoke(cli, ["bounds", "--lambda", "0", "--beta", "0.5"])
        report = json.loads(result.stdout)
        assert report["thresholds"]["hankel_beta"] == 0.409769789142
        assert report["branches"]["hankel2_bound"] == "interior-case"
        assert report["subcase"] == "critical-inside"

    def test_explicit_phi(self, runner):
        result = runner.invoke(cli, ["bounds", "--lambda", "0", "--beta", "0",
                                     "--phi-b1", "1", "--phi-b2", "3"])
        report = json.loads(result.stdout)
        assert report["phi"]["kind"] == "explicit"
        assert report["branches"]["fekete_functional_bound"] == "b2-exceeds-b1"
        assert report["fekete_functional_bound"] == 1.0


class TestBoundsCsv:

    def test_header_and_row(self, runner):
        result = runner.invoke(cli, ["bounds", "--lambda", "0", "--beta", "0", "--format", "csv"])
        assert result.exit_code == 0
        header, row = result.stdout.splitlines()
        assert header.startswith("lambda,beta,a2_bound")
        cells = dict(zip(header.split(","), row.split(",")))
        assert cells["hankel2_bound"] == "1.5"
        assert cells["hankel2_branch"] == "boundary-case"

    def test_output_file(self, runner, tmp_path):
        target = tmp_path / "bounds.json"
        result = runner.invoke(cli, ["bounds", "--lambda", "0", "--beta", "0", "--output", str(target)])
        assert result.exit_code == 0
        assert result.stdout == ""
        assert json.loads(target.read_text(encoding="utf-8"))["hankel2_bound"] == 1.5


class TestBoundsErrors:

    def test_lambda_out_of_range(self, runner):
        result = runner.invoke(cli, ["bounds", "--lambda", "2", "--beta", "0"])
        assert result.exit_code == 2
        message = json.loads(result.stderr.strip().splitlines()[-1])
        assert message["status"] == "error"
        assert "lambda" in message["message"]
        assert result.stdout == ""

    def test_missing_beta(self, runner):
        result = runner.invoke(cli, ["bounds", "--lambda", "0"])
        assert result.exit_code == 2
        assert "bounds requires --beta" in result.stderr

    def test_beta_one(self, runner):
        result = runner.invoke(cli, ["bounds", "--lambda", "0", "--beta", "1"])
        assert result.exit_code == 2

    def test_bad_settings(self, runner):
        result = runner.invoke(cli, ["--settings", "biuniv.config.Nothing", "bounds",
                                     "--lambda", "0", "--beta", "0"])
        assert result.exit_code == 2
        assert "cannot load settings" in result.stderr
