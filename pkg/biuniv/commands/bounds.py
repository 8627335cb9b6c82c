"""
bounds command: every closed-form bound at one (lambda, beta, phi)
"""

import logging

import click

from biuniv.helpers.cli_helper import build_run_config, run_options, write_output
from biuniv.helpers.error import BiunivError, handle_error
from biuniv.helpers.report_helper import BOUND_NAMES, make_bounds_report, to_csv, to_json
from biuniv.models.minda import ClassParams
from biuniv.services.closed_form_bounds import (
    a2_bound,
    a3_bound,
    beta_threshold,
    fekete_a2_bound,
    fekete_functional_bound,
    hankel2_bound,
)
from biuniv.services.proof_pipeline import subcase_label


logger = logging.getLogger(__name__)

CSV_HEADER = ["lambda", "beta"] + list(BOUND_NAMES) + ["delta", "hankel2_branch", "threshold"]


def compute_bounds(run_config) -> dict:
    """
    compute_bounds Evaluate the closed forms at the configured point

    :param run_config: RunConfig with lambda and beta set
    :return The bounds report dict
    """
    params = ClassParams(lam=run_config.lam, beta=run_config.beta)
    phi = run_config.phi_for(params.beta)

    bounds = {
        "a2_bound": a2_bound(phi, params.lam),
        "a3_bound": a3_bound(phi, params.lam),
        "fekete_a2_bound": fekete_a2_bound(phi, params.lam),
        "fekete_functional_bound": fekete_functional_bound(phi, params.lam),
        "hankel2_bound": hankel2_bound(params),
    }
    thresholds = beta_threshold(params.lam)
    report = make_bounds_report(
        params.lam, params.beta,
        {"b1": phi.b1, "b2": phi.b2, "b3": phi.b3, "kind": run_config.phi_label},
        bounds,
        {
            "a3_b1": bounds["a3_bound"].threshold,
            "hankel_beta": thresholds.theorem,
            "hankel_beta_raw": thresholds.theorem_raw,
            "leading_sign_beta_raw": thresholds.proof_raw,
        },
    )
    report["subcase"] = subcase_label(params)
    return report


@click.command('bounds')
@run_options
@click.pass_context
def bounds(ctx, **options):
    """
    bounds Print the coefficient bounds at one parameter point
    """
    try:
        run_config = build_run_config(ctx.obj, 'bounds', options)
        report = compute_bounds(run_config)
        logger.debug("bounds at lambda=%g beta=%g computed", run_config.lam, run_config.beta)

        if run_config.format == 'csv':
            row = dict(report)
            row["hankel2_branch"] = report["branches"]["hankel2_bound"]
            row["threshold"] = report["thresholds"]["hankel_beta"]
            text = to_csv(CSV_HEADER, [row])
        else:
            text = to_json(report)
        write_output(text, run_config.output)
    except BiunivError as error:
        ctx.exit(handle_error(error))
