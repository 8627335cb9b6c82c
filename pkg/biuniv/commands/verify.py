"""
verify command: the full numerical verification suite
"""

import logging

import click

from biuniv.helpers.checks import run_checks
from biuniv.helpers.cli_helper import build_run_config, run_options, write_output
from biuniv.helpers.error import BiunivError, handle_error
from biuniv.helpers.report_helper import CHECK_HEADER, make_verify_report, to_csv, to_json


logger = logging.getLogger(__name__)


@click.command('verify')
@run_options
@click.pass_context
def verify(ctx, **options):
    """
    verify Run every check and report pass/fail rows; exit 1 on any failure
    """
    try:
        run_config = build_run_config(ctx.obj, 'verify', options)
        logger.info("verifying %d lattice points, %d samples each, seed %d",
                    len(run_config.points), run_config.samples, run_config.seed)

        rows = run_checks(ctx.obj, run_config)
        report = make_verify_report(rows)

        text = to_csv(CHECK_HEADER, rows) if run_config.format == 'csv' else to_json(report)
        write_output(text, run_config.output)
    except BiunivError as error:
        ctx.exit(handle_error(error))

    if not report["passed"]:
        logger.error("failed checks: %s", ", ".join(report["failed_checks"]))
        ctx.exit(1)
