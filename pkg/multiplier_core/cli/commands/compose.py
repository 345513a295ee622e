"""
Implementation of the compose command.
"""
from __future__ import annotations

from config.models import EngineSettings, ExperimentConfig
from utils import logger

from ...engine import compose
from ..checks import composite_sequence_error, composition_error
from ..helpers import RunContext, alpha_columns, guarded, run_check, sequence_table
from ..types import CommandResult, ErrorResponse


def run_compose(config: ExperimentConfig, settings: EngineSettings) -> CommandResult | ErrorResponse:
    """Compose `multiplier` after `second`; rows check the coefficientwise product and the action."""

    def body() -> CommandResult:
        ctx = RunContext(config, settings)
        first, second = ctx.multiplier, ctx.second
        composite = compose(first, second, ctx.nodes)
        box = composite.box
        rows = [
            run_check('composite-sequence', 'composition-homomorphism', 0.0,
                      lambda: composite_sequence_error(first, second, composite)),
            run_check('composite-action', 'composition-homomorphism', ctx.tolerance,
                      lambda: composition_error(first, second, ctx.polynomials(), ctx.z_points, ctx.nodes)),
        ]
        logger.info(f"🔗 Composite {composite.kind.value} multiplier on box {box.degree_bounds}")
        header = [*alpha_columns(ctx.domain.dim), 'first_re', 'first_im', 'second_re', 'second_im',
                  'composite_re', 'composite_im']
        table = sequence_table(header, box, first.sequence_on(box), second.sequence_on(box), composite.sequence)
        return CommandResult(report=ctx.report('compose', rows, ctx.z_points.shape[0]), table=table)

    return guarded('compose', body)
