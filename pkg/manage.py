"""
Manager module for the verification toolkit
"""

import click

from biuniv import configure
from biuniv.commands.bounds import bounds
from biuniv.commands.sweep import sweep
from biuniv.commands.verify import verify
from biuniv.helpers.error import ConfigurationError, handle_error


@click.group()
@click.option('--settings', default=None, help='dotted path of the config class (default: BIUNIV_SETTINGS)')
@click.pass_context
def cli(ctx, settings):
    """
    cli Numerical checks of coefficient bounds for bi-univalent function classes
    """
    try:
        ctx.obj = configure(settings)
    except (ImportError, AttributeError, ValueError) as exc:
        ctx.exit(handle_error(ConfigurationError(f"cannot load settings: {exc}")))


cli.add_command(bounds)
cli.add_command(verify)
cli.add_command(sweep)


if __name__ == '__main__':
    cli()
