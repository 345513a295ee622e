"""
Implementation of the bench command.
"""
from __future__ import annotations

from config.models import EngineSettings, ExperimentConfig, to_complex
from utils import logger

from ..checks import convergence_errors, convergence_rate
from ..helpers import RunContext, guarded, run_check
from ..types import CommandResult, ErrorResponse, Table
from .verify import CONVERGENCE_RATIO


def run_bench(config: ExperimentConfig, settings: EngineSettings) -> CommandResult | ErrorResponse:
    """Trapezoidal error of (1/2πi)∮ dζ/(ζ - pole) per node count, with the ratio to the previous count."""

    def body() -> CommandResult:
        ctx = RunContext(config, settings)
        bench = config.bench
        errors = convergence_errors(to_complex(bench.pole), bench.radius, bench.nodes)
        table = Table(header=['nodes', 'error', 'ratio'])
        previous = None
        for n, error in errors:
            ratio = error / previous if previous else None
            table.rows.append([n, error, ratio])
            logger.info(f"📈 N={n}: error {error:.3e}")
            previous = error
        rows = [run_check('quadrature-convergence', 'spectral-convergence', CONVERGENCE_RATIO,
                          lambda: convergence_rate(errors))]
        return CommandResult(report=ctx.report('bench', rows), table=table)

    return guarded('bench', body)
