"""
Implementation of the verify command.
"""
from __future__ import annotations

from config.models import EngineSettings, ExperimentConfig, to_complex
from utils import logger

from ...series import TaylorPoly
from ..checks import (
    composition_error,
    convergence_errors,
    convergence_rate,
    duality_error,
    eigenvector_error,
    extraction_error,
    formula_error,
    functional_roundtrip_error,
    hyperplane_error,
    multiplier_roundtrip_error,
)
from ..helpers import RunContext, guarded, run_check
from ..types import CommandResult, ErrorResponse, Table

VERIFY_HEADER = ['check', 'anchor', 'max_error', 'tolerance', 'passed', 'detail']

# an error ratio per doubling of the node count
CONVERGENCE_RATIO = 0.25


def run_verify(config: ExperimentConfig, settings: EngineSettings) -> CommandResult | ErrorResponse:
    """Run the invariant battery on the configured multiplier.

    The functional of the duality checks is the configured one, else δ_(1,…,1)∘M.
    Composition uses the configured second multiplier, else M with itself.
    """

    def body() -> CommandResult:
        ctx = RunContext(config, settings)
        multiplier = ctx.multiplier
        second = ctx.second if config.second is not None else multiplier
        points = ctx.z_points
        polynomials = ctx.polynomials()
        extracted = TaylorPoly.random(ctx.rng, ctx.box)
        tol, nodes = ctx.tolerance, ctx.nodes
        bench = config.bench

        logger.info(f"🔎 Verifying {multiplier.kind.value} multiplier on box {ctx.box.degree_bounds}")
        rows = [
            run_check('eigencheck', 'monomial-eigenvector', tol,
                      lambda: eigenvector_error(multiplier, points, nodes)),
            run_check('laurent-formula', 'laurent-contour-formula', tol,
                      lambda: formula_error('laurent', multiplier, polynomials, points, nodes)),
            run_check('taylor-formula', 'taylor-contour-formula', tol,
                      lambda: formula_error('taylor', multiplier, polynomials, points, nodes)),
            run_check('hyperplane-evaluation', 'hyperplane-cauchy-mean', tol,
                      lambda: hyperplane_error(multiplier, polynomials[0], points, nodes)),
            run_check('multiplier-roundtrip', 'functional-multiplier-isomorphism', tol,
                      lambda: multiplier_roundtrip_error(multiplier, nodes)),
            run_check('functional-roundtrip', 'functional-multiplier-isomorphism', tol,
                      lambda: functional_roundtrip_error(ctx.functional, ctx.domain, ctx.box, nodes)),
            run_check('composition', 'composition-homomorphism', tol,
                      lambda: composition_error(multiplier, second, polynomials, points, nodes)),
            run_check('duality-roundtrip', 'cauchy-transform-duality', tol,
                      lambda: duality_error(ctx.functional, ctx.domain, ctx.box)),
            run_check('coefficient-extraction', 'cauchy-coefficient-extraction', tol,
                      lambda: extraction_error(extracted, nodes)),
            run_check('quadrature-convergence', 'spectral-convergence', CONVERGENCE_RATIO,
                      lambda: convergence_rate(convergence_errors(to_complex(bench.pole), bench.radius, bench.nodes))),
        ]
        table = Table(header=VERIFY_HEADER, rows=[
            [row.check, row.anchor, row.max_error, row.tolerance, row.passed, row.detail] for row in rows
        ])
        report = ctx.report('verify', rows, points.shape[0])
        logger.info(f"{'✅' if report.passed else '❌'} {sum(r.passed for r in rows)}/{len(rows)} checks passed")
        return CommandResult(report=report, table=table)

    return guarded('verify', body)
