"""
sweep command: the Hankel bound surface with sampled maxima, for plotting
"""

import logging

import click

from biuniv.helpers.checks import STREAM_CARATHEODORY, sampler_point
from biuniv.helpers.cli_helper import build_run_config, run_options, write_output
from biuniv.helpers.error import BiunivError, handle_error
from biuniv.helpers.report_helper import SWEEP_HEADER, make_sweep_row, to_csv, to_json
from biuniv.models.minda import ClassParams
from biuniv.services.caratheodory_sampler import point_streams
from biuniv.services.closed_form_bounds import hankel2_bound
from biuniv.services.worker_factory import WorkerFactory


logger = logging.getLogger(__name__)


def sweep_rows(config, run_config) -> list:
    """
    sweep_rows One row per (lambda, beta), sorted by (lambda, beta)

    :param config: The active config class
    :param run_config: RunConfig with both grids
    :return List of row dicts keyed by SWEEP_HEADER
    """
    points = sorted(run_config.points)
    streams = point_streams(run_config.seed, len(points), STREAM_CARATHEODORY)
    items = [(lam, beta, rng, run_config.samples, config) for (lam, beta), rng in zip(points, streams)]
    results = WorkerFactory.map(sampler_point, items)

    return [
        make_sweep_row(lam, beta, hankel2_bound(ClassParams(lam=lam, beta=beta)),
                       result["empirical_max"], result["accepted"])
        for (lam, beta), result in zip(points, results)
    ]


@click.command('sweep')
@run_options
@click.pass_context
def sweep(ctx, **options):
    """
    sweep Write the bound surface as CSV (default) or JSON
    """
    try:
        run_config = build_run_config(ctx.obj, 'sweep', options)
        rows = sweep_rows(ctx.obj, run_config)
        logger.info("sweep produced %d rows", len(rows))

        text = to_json(rows) if run_config.format == 'json' else to_csv(SWEEP_HEADER, rows)
        write_output(text, run_config.output)
    except BiunivError as error:
        ctx.exit(handle_error(error))
