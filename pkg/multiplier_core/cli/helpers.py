"""
General helper functions for runner commands.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable

import numpy as np

from config.exceptions import ConfigError, ConfigValidationError
from config.models import EngineSettings, ExperimentConfig
from utils import logger

from ..domains import ProductDomain
from ..duality import AnalyticFunctional
from ..engine import Multiplier, functional_from_multiplier
from ..exceptions import MultiplierError
from ..quadrature import resolve_nodes
from ..seminorms import DeltaSequence
from ..series import TaylorPoly, TruncationBox
from .builders import (
    build_box,
    build_compact,
    build_delta,
    build_domain,
    build_functional,
    build_germ,
    build_multiplier,
    build_series,
    build_z_grid,
)
from .types import CheckRow, CommandResult, ConfigErrorResponse, Environment, ErrorResponse, RunReport, Table


@dataclass
class RunContext:
    """Engine objects of one experiment, built lazily from the validated literals."""
    config: ExperimentConfig
    settings: EngineSettings
    rng: np.random.Generator = field(init=False)

    def __post_init__(self):
        self.rng = np.random.default_rng(self.settings.seed)

    @property
    def tolerance(self) -> float:
        return self.settings.tolerance

    @property
    def nodes(self) -> int | None:
        return self.settings.nodes

    @cached_property
    def domain(self) -> ProductDomain:
        return build_domain(self.config.domain)

    @cached_property
    def box(self) -> TruncationBox:
        return build_box(self.config.box)

    @cached_property
    def z_points(self) -> np.ndarray:
        return build_z_grid(self.config.z_grid, self.domain)

    @cached_property
    def multiplier(self) -> Multiplier:
        if self.config.multiplier is None:
            raise ConfigValidationError("a multiplier is required", path='.multiplier')
        return build_multiplier(self.config.multiplier, self.domain, self.box, self.rng, self.nodes)

    @cached_property
    def second(self) -> Multiplier:
        if self.config.second is None:
            raise ConfigValidationError("a second multiplier is required", path='.second')
        return build_multiplier(self.config.second, self.domain, self.box, self.rng, self.nodes, path='.second')

    @cached_property
    def functional(self) -> AnalyticFunctional:
        """The configured functional, else δ_(1,…,1)∘M of the configured multiplier."""
        if self.config.functional is not None:
            return build_functional(self.config.functional, self.domain, self.nodes)
        if self.config.multiplier is None:
            raise ConfigValidationError("a functional or a multiplier is required", path='.functional')
        return functional_from_multiplier(self.multiplier, self.nodes)

    def germ(self):
        if self.config.germ is None:
            raise ConfigValidationError("a germ is required", path='.germ')
        return build_germ(self.config.germ, self.domain.dim)

    def compact(self):
        if self.config.compact is None:
            raise ConfigValidationError("a compact is required", path='.compact')
        return build_compact(self.config.compact, self.domain.dim)

    def delta(self) -> DeltaSequence:
        return build_delta(self.config.delta, self.box)

    def polynomials(self) -> list[TaylorPoly]:
        """The configured series, else seeded random polynomials on the box."""
        if self.config.series is not None:
            return [build_series(self.config.series)]
        return [TaylorPoly.random(self.rng, self.box) for _ in range(self.config.samples)]

    def environment(self, z_grid_size: int = 0) -> Environment:
        box = list(self.config.box)
        try:
            nodes = list(resolve_nodes(self.nodes, len(box), TruncationBox(tuple(box))))
        except MultiplierError:
            nodes = None
        return Environment(
            dim=len(box),
            box=box,
            nodes=nodes,
            z_grid_size=z_grid_size,
            grid_radii=self.settings.grid_radii,
            grid_angles=self.settings.grid_angles,
            seed=self.settings.seed,
            tolerance=self.tolerance,
        )

    def report(self, command: str, rows: list[CheckRow], z_grid_size: int = 0) -> RunReport:
        return RunReport(command=command, name=self.config.name, rows=rows,
                         environment=self.environment(z_grid_size))


def run_check(check: str, anchor: str, tolerance: float, measure: Callable[[], float]) -> CheckRow:
    """One report row; any exception raised while measuring fails the row."""
    try:
        error = float(measure())
    except ConfigError:
        raise
    except Exception as e:
        logger.error(f"❌ Check {check} raised {type(e).__name__}: {e}")
        return CheckRow(check=check, anchor=anchor, tolerance=tolerance, passed=False,
                        detail=f"{type(e).__name__}: {e}")
    passed = bool(np.isfinite(error) and error <= tolerance)
    if passed:
        logger.info(f"✅ {check}: {error:.3e} <= {tolerance:.1e}")
    else:
        logger.warning(f"⚠️ {check}: {error:.3e} > {tolerance:.1e}")
    return CheckRow(check=check, anchor=anchor, max_error=error if np.isfinite(error) else None,
                    tolerance=tolerance, passed=passed)


def guarded(command: str, body: Callable[[], CommandResult]) -> CommandResult | ErrorResponse:
    """Run a command body, mapping failures to error responses."""
    try:
        return body()
    except ConfigError as e:
        logger.error(f"❌ Invalid configuration for {command}: {e}")
        return ConfigErrorResponse(error=str(e), path=getattr(e, 'path', None))
    except Exception as e:
        logger.error(f"❌ Error running {command}: {e}")
        return ErrorResponse(error=f"Error running {command}: {e}")


def point_columns(dim: int, prefix: str = 'z') -> list[str]:
    return [f'{prefix}{j + 1}_{part}' for j in range(dim) for part in ('re', 'im')]


def alpha_columns(dim: int) -> list[str]:
    return [f'alpha{j + 1}' for j in range(dim)]


def split_point(point) -> list[float]:
    return [float(v) for c in point for v in (complex(c).real, complex(c).imag)]


def sequence_table(header: list[str], box: TruncationBox, *sequences: np.ndarray) -> Table:
    """One row per α of the box: α, then re/im of each sequence."""
    rows = []
    for alpha in box.indices():
        row: list = list(alpha)
        for sequence in sequences:
            value = complex(sequence[alpha])
            row += [value.real, value.imag]
        rows.append(row)
    return Table(header=header, rows=rows)
