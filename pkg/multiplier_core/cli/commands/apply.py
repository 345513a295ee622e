"""
Implementation of the apply command.
"""
from __future__ import annotations

from typing import Literal

from config.models import EngineSettings, ExperimentConfig
from utils import logger

from ...series import Point
from ...tolerances import relative_error
from ..checks import apply_by, oracle
from ..helpers import RunContext, guarded, point_columns, run_check, split_point
from ..types import CommandResult, ErrorResponse, Table

Formula = Literal['all', 'sequence', 'laurent', 'taylor']

PATHS = ('sequence', 'laurent', 'taylor')

ANCHOR_OF = {
    'sequence': 'plumbing',
    'laurent': 'laurent-contour-formula',
    'taylor': 'taylor-contour-formula',
}


def apply_header(dim: int) -> list[str]:
    return ['sample', *point_columns(dim), 'path', 'value_re', 'value_im', 'oracle_re', 'oracle_im', 'abs_err']


def run_apply(config: ExperimentConfig, settings: EngineSettings,
              formula: Formula = 'all') -> CommandResult | ErrorResponse:
    """Apply the configured multiplier to the configured series (or seeded random ones) on the z-grid.

    Args:
        formula: application path, or 'all' for the three of them
    """

    def body() -> CommandResult:
        ctx = RunContext(config, settings)
        multiplier = ctx.multiplier
        points = ctx.z_points
        polynomials = ctx.polynomials()
        paths = PATHS if formula == 'all' else (formula,)

        table = Table(header=apply_header(ctx.domain.dim))
        errors = {path: [] for path in paths}

        def measure(path: str) -> float:
            return max(errors[path], default=0.0)

        for index, f in enumerate(polynomials):
            for z in points:
                z = Point(tuple(complex(c) for c in z))
                expected, scale = oracle(multiplier, f, z)
                for path in paths:
                    try:
                        value = apply_by(path, multiplier, f, z, ctx.nodes)
                    except Exception as e:
                        logger.error(f"❌ {path} path failed at {z.coords}: {e}")
                        errors[path].append(float('inf'))
                        continue
                    errors[path].append(relative_error(value, expected, scale=scale))
                    table.rows.append([index, *split_point(z.coords), path, value.real, value.imag,
                                       expected.real, expected.imag, abs(value - expected)])

        rows = [run_check(f'{path}-formula', ANCHOR_OF[path], ctx.tolerance, lambda p=path: measure(p))
                for path in paths]
        logger.info(f"🧮 Applied {multiplier.kind.value} multiplier at {points.shape[0]} points")
        return CommandResult(report=ctx.report('apply', rows, points.shape[0]), table=table)

    return guarded('apply', body)
