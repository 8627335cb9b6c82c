"""
Helper functions shared by the click commands
"""

import click

from biuniv.helpers.error import ConfigurationError
from biuniv.models.run_config import RunConfigModel


def run_options(func):
    """
    run_options Attach every run option to a command

    Options left unset arrive as None so the RunConfig model can fill
    defaults from the active config class.
    """
    options = [
        click.option('--lambda', 'lambda_', type=float, default=None, help='lambda in [0, 1]'),
        click.option('--beta', type=float, default=None, help='beta in [0, 1)'),
        click.option('--lambda-grid', default=None, help='lambda grid as a:b:step'),
        click.option('--beta-grid', default=None, help='beta grid as a:b:step'),
        click.option('--phi-b1', type=float, default=None, help='B1 of phi'),
        click.option('--phi-b2', type=float, default=None, help='B2 of phi'),
        click.option('--phi-kind', type=click.Choice(['linear', 'power']), default=None,
                     help='special phi instead of B1/B2'),
        click.option('--phi-param', type=float, default=None, help='parameter of the special phi'),
        click.option('--resolution', type=float, default=None, help='oracle grid step'),
        click.option('--samples', type=int, default=None, help='accepted samples per lattice point'),
        click.option('--seed', type=int, default=None, help='random seed'),
        click.option('--output', default='-', show_default=True, help='output path, - for stdout'),
        click.option('--format', 'format_', type=click.Choice(['json', 'csv']), default=None,
                     help='report format'),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def build_run_config(config, command: str, options: dict):
    """
    build_run_config Turn click options into a validated RunConfig

    :param config: The active config class
    :param command: Command name
    :param options: The click keyword arguments
    :return RunConfig
    """
    data = {
        "command": command,
        "lambda": options.get("lambda_"),
        "beta": options.get("beta"),
        "lambda_grid": options.get("lambda_grid"),
        "beta_grid": options.get("beta_grid"),
        "phi_b1": options.get("phi_b1"),
        "phi_b2": options.get("phi_b2"),
        "phi_kind": options.get("phi_kind"),
        "phi_param": options.get("phi_param"),
        "resolution": options.get("resolution"),
        "samples": options.get("samples"),
        "seed": options.get("seed"),
        "output": options.get("output") or "-",
        "format": options.get("format_"),
    }
    return RunConfigModel(config).build(data)


def write_output(text: str, output: str):
    """
    write_output Write a report to a file, or stdout for '-'

    :raises ConfigurationError: If the path cannot be written
    """
    if output == "-":
        click.echo(text, nl=False)
        return

    try:
        with open(output, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    except OSError as exc:
        raise ConfigurationError(f"cannot write output '{output}': {exc.strerror or exc}") from exc
