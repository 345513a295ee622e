"""
Implementation of the seminorm command.
"""
from __future__ import annotations

from typing import Literal, Optional

import numpy as np

from config.models import EngineSettings, ExperimentConfig
from utils import logger

from ...seminorms import boundedness_probe, functional_seminorm, germ_seminorm, uniform_germ_seminorm
from ..helpers import RunContext, guarded, run_check
from ..types import CommandResult, ErrorResponse, Table

SeminormKind = Literal['germ', 'uniform', 'functional', 'probe_s', 'probe_b']

SEMINORM_HEADER = ['kind', 'value', 'branch', 'alpha', 'point', 'z', 'z_grid_size', 'evaluations']


def _flat(point) -> Optional[list[float]]:
    if point is None:
        return None
    return [float(v) for c in point for v in (complex(c).real, complex(c).imag)]


def run_seminorm(config: ExperimentConfig, settings: EngineSettings,
                 kind: Optional[SeminormKind] = None) -> CommandResult | ErrorResponse:
    """Evaluate one seminorm or boundedness probe.

    With `seminorm.expected` in the config the value is checked against it;
    otherwise the row only requires a finite value.
    """

    def body() -> CommandResult:
        ctx = RunContext(config, settings)
        selected = kind or config.seminorm.kind
        nodes = ctx.nodes
        box, delta = ctx.box, ctx.delta()

        if selected == 'germ':
            report = germ_seminorm(ctx.germ(), ctx.domain, delta, box, nodes=nodes)
        elif selected == 'uniform':
            report = uniform_germ_seminorm(ctx.germ(), ctx.domain, ctx.compact(), delta, box, nodes=nodes)
        elif selected == 'functional':
            report = functional_seminorm(ctx.functional, ctx.domain, ctx.compact(), delta, box, nodes=nodes)
        else:
            report = boundedness_probe(ctx.multiplier, ctx.compact(), 'S' if selected == 'probe_s' else 'B', delta,
                                       box, max_order=config.seminorm.max_order, nodes=nodes)

        if selected.startswith('probe'):
            row = [selected, report.value, '', report.alpha, _flat(report.point), None, None, report.evaluations]
            anchor = 'test-family-bound'
        else:
            row = [selected, report.value, report.branch, report.alpha, _flat(report.point), _flat(report.z),
                   report.z_grid_size, None]
            anchor = 'delta-seminorm'

        expected = config.seminorm.expected
        if expected is not None:
            measure = lambda: abs(report.value - expected)
        else:
            measure = lambda: 0.0 if np.isfinite(report.value) else float('inf')
        rows = [run_check(f'{selected}-seminorm', anchor, ctx.tolerance, measure)]
        logger.info(f"📏 {selected} seminorm {report.value:.12g}")
        table = Table(header=SEMINORM_HEADER, rows=[row])
        return CommandResult(report=ctx.report('seminorm', rows), table=table)

    return guarded('seminorm', body)
