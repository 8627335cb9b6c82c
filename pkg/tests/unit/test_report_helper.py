"""Tests for biuniv.helpers.report_helper module."""

import json

from biuniv.helpers.report_helper import (
    BOUND_NAMES,
    CHECK_HEADER,
    SWEEP_HEADER,
    format_cell,
    format_number,
    make_bounds_report,
    make_check_row,
    make_cli_message,
    make_sweep_row,
    make_verify_report,
    to_csv,
    to_json,
)
from biuniv.models.minda import BoundReport


class TestFormatNumber:

    def test_twelve_significant_digits(self):
        assert format_number(1.0 / 3.0) == 0.333333333333

    def test_exact_values_unchanged(self):
        assert format_number(1.5) == 1.5

    def test_none_and_int(self):
        assert format_number(None) is None
        assert format_number(7) == 7

    def test_infinite(self):
        assert format_number(float("inf")) == "inf"

    def test_negative_zero(self):
        row = make_check_row("inverse-identity", True, 3, -0.0, {"a2_abs": -0.0})
        assert "-0" not in to_json(row)
        assert to_csv(CHECK_HEADER, [row]).splitlines()[1] == "inverse-identity,true,3,0,a2_abs=0"


class TestFormatCell:

    def test_float(self):
        assert format_cell(2.0 / 3.0) == "0.666666666667"

    def test_bool_and_none(self):
        assert format_cell(True) == "true"
        assert format_cell(None) == ""

    def test_int(self):
        assert format_cell(25) == "25"

    def test_negative_zero(self):
        assert format_cell(-0.0) == "0"


class TestMessages:

    def test_cli_message(self):
        assert make_cli_message("error", "boom") == {"status": "error", "message": "boom"}

    def test_bounds_report(self):
        bounds = {name: BoundReport(value=0.5, branch="single") for name in BOUND_NAMES}
        bounds["fekete_functional_bound"] = BoundReport(value=1.0 / 3.0, branch="b2-within-b1", delta=2.0 / 3.0)
        report = make_bounds_report(1.0, 0.0, {"b1": 2.0, "b2": 2.0, "kind": "linear-order"}, bounds,
                                    {"hankel_beta": 0.0})
        assert report["fekete_functional_bound"] == 0.333333333333
        assert report["delta"] == 0.666666666667
        assert report["branches"]["hankel2_bound"] == "single"
        assert report["phi"]["kind"] == "linear-order"

    def test_sweep_row(self):
        row = make_sweep_row(0.0, 0.0, BoundReport(value=1.5, branch="boundary-case", threshold=0.4), 1.2, 100)
        assert list(row) == SWEEP_HEADER
        assert row["samples"] == 100

    def test_check_row(self):
        row = make_check_row("t1", True, 10, -0.5, {"c": 1.0})
        assert list(row) == CHECK_HEADER
        assert row["witness"] == {"c": 1.0}

    def test_check_row_without_witness(self):
        assert make_check_row("t1", True, 0, None, None)["witness"] is None


class TestVerifyReport:

    def test_all_passed(self):
        report = make_verify_report([make_check_row("a", True, 1, 0.0, None)])
        assert report["passed"]
        assert report["first_witness"] is None
        assert report["size"] == 1

    def test_first_failure_is_witness(self):
        rows = [
            make_check_row("a", True, 1, 0.0, None),
            make_check_row("b", False, 1, 2.0, {"c": 0.5}),
            make_check_row("d", False, 1, 3.0, {"c": 1.5}),
        ]
        report = make_verify_report(rows)
        assert not report["passed"]
        assert report["failed_checks"] == ["b", "d"]
        assert report["first_witness"]["check"] == "b"


class TestSerialization:

    def test_json_round_trip(self):
        assert json.loads(to_json({"a": [1, 2]})) == {"a": [1, 2]}

    def test_csv_lf_line_endings(self):
        text = to_csv(["a", "b"], [{"a": 1.0, "b": "x"}])
        assert text == "a,b\n1,x\n"
        assert "\r" not in text

    def test_csv_dict_cell(self):
        text = to_csv(["witness"], [{"witness": {"c": 0.5, "lambda": 1.0}}])
        assert text.splitlines()[1] == "c=0.5;lambda=1"
