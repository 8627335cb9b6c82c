"""
Helper functions to assemble the machine-readable reports of the CLI
"""

import csv
import io
import json
import math


SIGNIFICANT_DIGITS = 12

BOUND_NAMES = ("a2_bound", "a3_bound", "fekete_a2_bound", "fekete_functional_bound", "hankel2_bound")

SWEEP_HEADER = ["lambda", "beta", "hankel2_bound", "branch", "threshold", "empirical_max", "samples"]

CHECK_HEADER = ["check", "passed", "points", "worst_residual", "witness"]


def format_number(value):
    """
    format_number Round a float to the report precision

    :param value: The float (or None) to format
    :return The value rounded to 12 significant digits, None passes through
    """
    if value is None:
        return None
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return value
    # -0.0 prints as 0
    value = float(value) + 0.0
    if not math.isfinite(value):
        return str(value)
    return float(f"{value:.{SIGNIFICANT_DIGITS}g}")


def format_cell(value):
    """Render one CSV cell, numbers with 12 significant digits."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value + 0.0:.{SIGNIFICANT_DIGITS}g}"
    return str(value)


def make_cli_message(status: str, message: str) -> dict:
    """
    make_cli_message Makes the status message object

    :param status: The status of the message
    :param message: The message to set
    :return The dict message object
    """

    data = {
        "status": status,
        "message": message
    }

    return data


def make_bounds_report(lam: float, beta: float, phi: dict, bounds: dict, thresholds: dict) -> dict:
    """
    make_bounds_report Flatten the BoundReports of one parameter point

    :param lam: lambda
    :param beta: beta
    :param phi: Description of phi (b1, b2, b3, kind)
    :param bounds: BoundReports keyed by BOUND_NAMES
    :param thresholds: Named switch points
    :return A dict with one number per bound, plus branches, delta and thresholds
    """

    data = {
        "lambda": format_number(lam),
        "beta": format_number(beta),
        "phi": {key: value if key == "kind" else format_number(value) for key, value in phi.items()},
    }
    for name in BOUND_NAMES:
        data[name] = format_number(bounds[name].value)
    data["delta"] = format_number(bounds["fekete_functional_bound"].delta)
    data["branches"] = {name: bounds[name].branch for name in BOUND_NAMES}
    data["thresholds"] = {name: format_number(value) for name, value in thresholds.items()}

    return data


def make_sweep_row(lam: float, beta: float, report, empirical_max, samples: int) -> dict:
    """
    make_sweep_row One row of the bound surface

    :param report: The hankel2 BoundReport at (lam, beta)
    :param empirical_max: Largest sampled Hankel functional, None if nothing was accepted
    :param samples: Number of accepted samples behind empirical_max
    :return A dict keyed by SWEEP_HEADER
    """

    data = {
        "lambda": format_number(lam),
        "beta": format_number(beta),
        "hankel2_bound": format_number(report.value),
        "branch": report.branch,
        "threshold": format_number(report.threshold),
        "empirical_max": format_number(empirical_max),
        "samples": int(samples),
    }

    return data


def make_check_row(check: str, passed: bool, points: int,
                   worst_residual: float, witness) -> dict:
    """
    make_check_row A single location to make the row every verification check reports

    :param check: Name of the check
    :param passed: Whether the check passed
    :param points: How many points were checked
    :param worst_residual: Largest violation seen (<= 0 means slack)
    :param witness: Coordinates of the worst point, or None
    :return A python dict in report format
    """

    data = {
        "check": check,
        "passed": bool(passed),
        "points": int(points),
        "worst_residual": format_number(worst_residual),
        "witness": {key: format_number(value) for key, value in witness.items()} if witness else None,
    }

    return data


def make_verify_report(rows: list) -> dict:
    """
    make_verify_report Wrap the check rows in the verify report envelope

    :param rows: The check rows
    :return The report dict, with the first failing row copied into first_witness
    """
    failed = [row for row in rows if not row["passed"]]

    data = {
        "size": len(rows),
        "passed": not failed,
        "failed_checks": [row["check"] for row in failed],
        "first_witness": failed[0] if failed else None,
        "values": rows,
    }

    return data


def to_json(data) -> str:
    """Serialize a report deterministically."""
    return json.dumps(data, indent=2, sort_keys=False) + "\n"


def to_csv(header: list, rows: list) -> str:
    """
    to_csv Render rows of dicts as CSV with LF line endings

    :param header: Column names, in order
    :param rows: Iterable of dicts keyed by the header names
    :return The CSV text
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        cells = []
        for name in header:
            value = row.get(name)
            if isinstance(value, dict):
                value = ";".join(f"{key}={format_cell(item)}" for key, item in value.items())
            cells.append(format_cell(value))
        writer.writerow(cells)
    return buffer.getvalue()
