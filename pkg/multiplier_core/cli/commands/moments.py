"""
Implementation of the moments command.
"""
from __future__ import annotations

import numpy as np

from config.models import EngineSettings, ExperimentConfig
from utils import logger

from ...duality import SeparableGerm, moments
from ...engine import sequence_distance
from ..helpers import RunContext, alpha_columns, guarded, run_check, sequence_table
from ..types import CommandResult, ErrorResponse


def run_moments(config: ExperimentConfig, settings: EngineSettings) -> CommandResult | ErrorResponse:
    """Moments T(ζ^α) over the box.

    Kernels with exact rational data are checked against their Laurent coefficients.
    """

    def body() -> CommandResult:
        ctx = RunContext(config, settings)
        functional = ctx.functional
        values = moments(functional, ctx.box)
        rows = []
        if isinstance(functional.kernel, SeparableGerm):
            exact = functional.kernel.laurent_sequence(ctx.box)
            rows.append(run_check('moments', 'moment-sequence', ctx.tolerance,
                                  lambda: sequence_distance(values, exact)))
        else:
            rows.append(run_check('moments-finite', 'plumbing', ctx.tolerance,
                                  lambda: 0.0 if np.all(np.isfinite(values)) else float('inf')))
        logger.info(f"🧮 {ctx.box.size} moments on radii {functional.contour.radii()}")
        table = sequence_table([*alpha_columns(ctx.domain.dim), 're', 'im'], ctx.box, values)
        return CommandResult(report=ctx.report('moments', rows), table=table)

    return guarded('moments', body)
