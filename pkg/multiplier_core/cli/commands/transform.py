"""
Implementation of the transform command.
"""
from __future__ import annotations

import numpy as np

from config.models import EngineSettings, ExperimentConfig
from utils import logger

from ...duality import AnalyticFunctional, cauchy_transform, cauchy_transform_germ, moments
from ...engine import sequence_distance
from ...quadrature import sample
from ...settings import grid_setting
from ..helpers import RunContext, alpha_columns, guarded, point_columns, run_check, split_point
from ..types import CommandResult, ErrorResponse, Table


def outer_boundary_points(domain, count: int) -> np.ndarray:
    """Tensor grid on the outer boundary circle of every factor, shape (m, n)."""
    axes = [factor.boundary()[0].nodes(count) for factor in domain.factors]
    mesh = np.meshgrid(*axes, indexing='ij')
    return np.stack(mesh, axis=-1).reshape(-1, domain.dim)


def run_transform(config: ExperimentConfig, settings: EngineSettings,
                  roundtrip: bool = False) -> CommandResult | ErrorResponse:
    """Cauchy transform f_T on the outer boundary of the domain, or with `roundtrip`
    the moments of T_(f_T) beside those of T.
    """

    def body() -> CommandResult:
        ctx = RunContext(config, settings)
        functional = ctx.functional
        dim = ctx.domain.dim
        if roundtrip:
            transformed = AnalyticFunctional.from_germ(cauchy_transform_germ(functional), ctx.domain,
                                                       functional.nodes)
            before, after = moments(functional, ctx.box), moments(transformed, ctx.box)
            table = Table(header=[*alpha_columns(dim), 'moment_re', 'moment_im', 'roundtrip_re', 'roundtrip_im',
                                  'diff'])
            for alpha in ctx.box.indices():
                a, b = complex(before[alpha]), complex(after[alpha])
                table.rows.append([*alpha, a.real, a.imag, b.real, b.imag, abs(a - b)])
            rows = [run_check('transform-roundtrip', 'cauchy-transform-duality', ctx.tolerance,
                              lambda: sequence_distance(after, before))]
            logger.info(f"🔁 Roundtrip over {ctx.box.size} moments")
            return CommandResult(report=ctx.report('transform', rows), table=table)

        points = outer_boundary_points(ctx.domain, max(1, grid_setting.angles))
        values = np.atleast_1d(cauchy_transform(functional, points))
        kernel = sample(functional.kernel, points)
        table = Table(header=[*point_columns(dim, 'zeta'), 'value_re', 'value_im', 'kernel_re', 'kernel_im'])
        for p, v, k in zip(points, values, kernel):
            table.rows.append([*split_point(p), v.real, v.imag, k.real, k.imag])
        scale = float(np.max(np.abs(kernel))) if kernel.size else 0.0
        rows = [run_check('cauchy-transform', 'cauchy-transform-duality', ctx.tolerance,
                          lambda: float(np.max(np.abs(values - kernel))) / scale if scale > 0
                          else float(np.max(np.abs(values), initial=0.0)))]
        logger.info(f"🧮 Cauchy transform at {points.shape[0]} points")
        return CommandResult(report=ctx.report('transform', rows), table=table)

    return guarded('transform', body)
