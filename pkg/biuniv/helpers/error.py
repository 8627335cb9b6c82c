"""
Error types and the command error handler
"""

import json

import click

from biuniv.helpers.report_helper import make_cli_message


class BiunivError(Exception):
    """Base error, carries the process exit code for the CLI"""
    exit_code = 2


class DomainError(BiunivError, ValueError):
    """A parameter lies outside its mathematical domain"""
    exit_code = 2


class ConfigurationError(BiunivError):
    """Invalid run configuration or unusable output target"""
    exit_code = 2


class InconsistencyError(BiunivError, RuntimeError):
    """An internal consistency assertion failed"""
    exit_code = 1


class DegenerateDenominatorError(InconsistencyError):
    """A closed-form denominator vanished where the formula needs it"""


def handle_error(error):
    """
    handle_error Report an error on stderr

    :param error: The raised BiunivError
    :return The exit code the command should terminate with
    """

    # Create the CLI message
    return_data = make_cli_message("error", str(error) if str(error) else "An error occurred")
    click.echo(json.dumps(return_data), err=True)

    return error.exit_code
