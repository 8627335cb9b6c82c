"""Tests for the verify command."""

import json

from biuniv.helpers.report_helper import CHECK_HEADER, make_check_row
from manage import cli


SMALL_RUN = ["verify", "--lambda-grid", "0:1:1", "--beta-grid", "0:0.8:0.8",
             "--samples", "300", "--seed", "3"]


class TestVerifyPasses:

    def test_json_report(self, runner):
        result = runner.invoke(cli, SMALL_RUN)
        assert result.exit_code == 0, result.stdout
        report = json.loads(result.stdout)
        assert report["passed"] is True
        assert report["failed_checks"] == []
        assert report["first_witness"] is None
        assert report["size"] == len(report["values"])
        names = [row["check"] for row in report["values"]]
        for expected in ("corner-dominance", "branch-continuity", "oracle-agreement",
                         "sampler-hankel-bound", "schwarz-a3-identity", "inverse-identity"):
            assert expected in names

    def test_csv_report(self, runner, tmp_path):
        target = tmp_path / "verify.csv"
        result = runner.invoke(cli, SMALL_RUN + ["--format", "csv", "--output", str(target)])
        assert result.exit_code == 0
        lines = target.read_text(encoding="utf-8").splitlines()
        assert lines[0] == ",".join(CHECK_HEADER)
        assert all(",true," in line for line in lines[1:])


class TestVerifyFailures:

    def test_failed_check_exits_one(self, runner, mocker):
        rows = [
            make_check_row("steady", True, 4, -0.1, {"c": 0.5}),
            make_check_row("broken", False, 4, 0.25, {"lambda": 0.5, "c": 1.0}),
        ]
        mocker.patch("biuniv.commands.verify.run_checks", return_value=rows)

        result = runner.invoke(cli, SMALL_RUN)
        assert result.exit_code == 1
        report = json.loads(result.stdout)
        assert report["passed"] is False
        assert report["failed_checks"] == ["broken"]
        assert report["first_witness"]["witness"] == {"lambda": 0.5, "c": 1.0}

    def test_resolution_too_coarse(self, runner):
        result = runner.invoke(cli, ["verify", "--resolution", "0.5"])
        assert result.exit_code == 2
        assert "resolution exceeds maximum" in result.stderr
        assert result.stdout == ""

    def test_zero_samples(self, runner):
        result = runner.invoke(cli, ["verify", "--samples", "0"])
        assert result.exit_code == 2
        assert json.loads(result.stderr.strip().splitlines()[-1])["status"] == "error"

    def test_bad_grid(self, runner):
        result = runner.invoke(cli, ["verify", "--lambda-grid", "0-1"])
        assert result.exit_code == 2
        assert "lambda-grid" in result.stderr
