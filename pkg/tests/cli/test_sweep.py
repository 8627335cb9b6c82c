"""Tests for the sweep command."""

import csv
import io
import json

from biuniv.helpers.report_helper import SWEEP_HEADER
from manage import cli


GRID = ["sweep", "--lambda-grid", "0:1:0.25", "--beta-grid", "0:0.8:0.2", "--samples", "200"]


def read_rows(text):
    return list(csv.DictReader(io.StringIO(text)))


class TestSweepCsv:

    def test_surface(self, runner):
        result = runner.invoke(cli, GRID + ["--seed", "11"])
        assert result.exit_code == 0, result.stderr
        lines = result.stdout.splitlines()
        assert lines[0] == ",".join(SWEEP_HEADER)
        assert len(lines) == 26

        rows = read_rows(result.stdout)
        assert rows[0]["lambda"] == "0"
        assert rows[0]["beta"] == "0"
        assert rows[0]["hankel2_bound"] == "1.5"
        assert rows[0]["branch"] == "boundary-case"

    def test_sorted_by_lambda_then_beta(self, runner):
        rows = read_rows(runner.invoke(cli, GRID + ["--seed", "11"]).stdout)
        keys = [(float(row["lambda"]), float(row["beta"])) for row in rows]
        assert keys == sorted(keys)

    def test_empirical_below_bound(self, runner):
        rows = read_rows(runner.invoke(cli, GRID + ["--seed", "11"]).stdout)
        for row in rows:
            assert int(row["samples"]) == 200
            assert float(row["empirical_max"]) <= float(row["hankel2_bound"]) + 1e-9

    def test_deterministic(self, runner):
        first = runner.invoke(cli, GRID + ["--seed", "5"])
        second = runner.invoke(cli, GRID + ["--seed", "5"])
        assert first.stdout == second.stdout
        assert first.stdout.encode("utf-8") == second.stdout.encode("utf-8")

    def test_seed_changes_samples(self, runner):
        first = read_rows(runner.invoke(cli, GRID + ["--seed", "5"]).stdout)
        second = read_rows(runner.invoke(cli, GRID + ["--seed", "6"]).stdout)
        assert [row["hankel2_bound"] for row in first] == [row["hankel2_bound"] for row in second]
        assert [row["empirical_max"] for row in first] != [row["empirical_max"] for row in second]


class TestSweepJson:

    def test_json_rows(self, runner):
        result = runner.invoke(cli, ["sweep", "--lambda-grid", "0:1:1", "--beta-grid", "0",
                                     "--samples", "100", "--format", "json"])
        assert result.exit_code == 0
        rows = json.loads(result.stdout)
        assert [row["lambda"] for row in rows] == [0.0, 1.0]
        assert rows[1]["hankel2_bound"] == 0.333333333333
        assert list(rows[0]) == SWEEP_HEADER


class TestSweepErrors:

    def test_unwritable_output(self, runner, tmp_path):
        result = runner.invoke(cli, ["sweep", "--lambda-grid", "0", "--beta-grid", "0", "--samples", "10",
                                     "--output", str(tmp_path / "missing" / "sweep.csv")])
        assert result.exit_code == 2
        assert "cannot write output" in result.stderr

    def test_beta_grid_reaching_one(self, runner):
        result = runner.invoke(cli, ["sweep", "--beta-grid", "0:1:0.5"])
        assert result.exit_code == 2
