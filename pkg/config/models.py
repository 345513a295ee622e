"""
Configuration models

Engine settings acquired from the configuration manager, and the pydantic
models of the experiment files read by the command line runner.
"""

import json
from abc import ABC
from pathlib import Path
from typing import Annotated, Any, Dict, List, Literal, Optional, Set, Type, TypeVar, Union

from pydantic import (
    BaseModel,
    BeforeValidator,
    ConfigDict,
    Field,
    NonNegativeFloat,
    NonNegativeInt,
    PositiveFloat,
    PositiveInt,
    ValidationError,
    model_validator,
)

from multiplier_core.settings import grid_setting, quadrature_setting, tolerance_setting
from utils import logger

from .constants import CONFIG_METADATA
from .exceptions import ConfigSourceError, ConfigValidationError
from .manager import ConfigManager, config_manager


T = TypeVar('T', bound='BaseConfig')


class BaseConfig(BaseModel, ABC):
    """Base configuration class with common functionality"""

    @classmethod
    def get_config_keys(cls) -> Set[str]:
        """Get configuration keys from field aliases"""
        keys = set()
        for field_name, field_info in cls.model_fields.items():
            key = field_info.alias or field_name
            keys.add(key)
        return keys

    @classmethod
    def acquire(cls: Type[T], manager: Optional[ConfigManager] = None) -> T:
        """Create configuration instance from configuration manager"""

        keys = sorted(cls.get_config_keys())
        config_data = (manager or config_manager).get_config(keys)

        try:
            instance = cls.model_validate(config_data)
            logger.debug(f"Created {cls.__name__} instance")
            return instance
        except ValidationError as e:
            logger.error(f"Failed to create {cls.__name__}: {e}")
            error = e.errors()[0]
            raise ConfigValidationError(error['msg'], path=render_location(error['loc']))


def _setting(key: str, **kwargs) -> Any:
    """Field for a metadata key, carrying its bounds and description"""
    metadata = CONFIG_METADATA[key]
    validation = dict(metadata.get('validation', {}))
    extra = validation.pop('schema_extra', {})
    return Field(alias=key, description=metadata.get('description'), **validation, **extra, **kwargs)


class EngineSettings(BaseConfig):
    """Engine knobs merged from overrides, the experiment file, environment and defaults"""
    nodes: Optional[int] = _setting('nodes', default=None)
    max_nodes: int = _setting('max_nodes')
    hyperplane_nodes: int = _setting('hyperplane_nodes')
    contour_margin: float = _setting('contour_margin')
    grid_radii: int = _setting('grid_radii')
    grid_angles: int = _setting('grid_angles')
    boundary_points: int = _setting('boundary_points')
    local_radius_fraction: float = _setting('local_radius_fraction')
    tolerance: float = _setting('tolerance')
    relative_floor: float = _setting('relative_floor')
    seed: int = _setting('seed')
    log_level: str = _setting('log_level')

    def apply(self) -> None:
        """Push the knobs into the engine's setting models"""
        quadrature_setting.max_nodes = self.max_nodes
        quadrature_setting.hyperplane_nodes = self.hyperplane_nodes
        quadrature_setting.contour_margin = self.contour_margin
        grid_setting.radii = self.grid_radii
        grid_setting.angles = self.grid_angles
        grid_setting.boundary_points = self.boundary_points
        grid_setting.local_radius_fraction = self.local_radius_fraction
        tolerance_setting.tolerance = self.tolerance
        tolerance_setting.relative_floor = self.relative_floor
        logger.debug(f"Engine settings applied: {self.model_dump(by_alias=True)}")


# experiment files


def render_location(loc) -> str:
    """pydantic error location as a JSON path: ('a', 0, 'b') -> '.a[0].b'"""
    path = ''
    for part in loc:
        path += f'[{part}]' if isinstance(part, int) else f'.{part}'
    return path or '.'


def _complex_pair(value: Any) -> Any:
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return (float(value), 0.0)
    return value


ComplexValue = Annotated[tuple[float, float], BeforeValidator(_complex_pair)]


def to_complex(value: ComplexValue) -> complex:
    return complex(value[0], value[1])


class LiteralModel(BaseModel):
    model_config = ConfigDict(extra='forbid')

    def _exactly_one(self, *names: str) -> None:
        given = [n for n in names if getattr(self, n) not in (None, False)]
        if len(given) != 1:
            raise ValueError(f"exactly one of {', '.join(names)} is required, got {given or 'none'}")


class CoefficientLiteral(LiteralModel):
    alpha: List[NonNegativeInt]
    re: float = 0.0
    im: float = 0.0


class SeriesLiteral(LiteralModel):
    dim: Optional[PositiveInt] = None
    box: List[NonNegativeInt] = Field(min_length=1)
    coeffs: List[CoefficientLiteral] = Field(default_factory=list)

    @model_validator(mode='after')
    def _check_indices(self):
        if self.dim is not None and self.dim != len(self.box):
            raise ValueError(f"dim {self.dim} does not match box of length {len(self.box)}")
        for term in self.coeffs:
            if len(term.alpha) != len(self.box) or any(a > d for a, d in zip(term.alpha, self.box)):
                raise ValueError(f"alpha {term.alpha} is outside the box {self.box}")
        return self


class DiscLiteral(LiteralModel):
    center: ComplexValue = (0.0, 0.0)
    radius: PositiveFloat


class AnnulusLiteral(LiteralModel):
    r_in: PositiveFloat
    r_out: PositiveFloat


class FactorLiteral(LiteralModel):
    disc: Optional[DiscLiteral] = None
    annulus: Optional[AnnulusLiteral] = None

    @model_validator(mode='after')
    def _one_kind(self):
        self._exactly_one('disc', 'annulus')
        return self


class DomainLiteral(LiteralModel):
    factors: List[FactorLiteral] = Field(min_length=1)


class ClosedDiscLiteral(LiteralModel):
    center: ComplexValue = (0.0, 0.0)
    radius: NonNegativeFloat = 0.0


class CompactLiteral(LiteralModel):
    factors: List[ClosedDiscLiteral] = Field(min_length=1)


class RationalLiteral(LiteralModel):
    """Per variable, ascending numerator and denominator coefficients."""
    numerators: List[List[ComplexValue]] = Field(min_length=1)
    denominators: List[List[ComplexValue]] = Field(min_length=1)
    weight: ComplexValue = (1.0, 0.0)

    @model_validator(mode='after')
    def _same_length(self):
        if len(self.numerators) != len(self.denominators):
            raise ValueError("numerators and denominators need one entry per variable")
        return self


class GermLiteral(LiteralModel):
    product_poles: Optional[List[ComplexValue]] = None
    rational: Optional[RationalLiteral] = None
    side: Literal['laurent', 'taylor'] = 'laurent'
    weight: ComplexValue = (1.0, 0.0)

    @model_validator(mode='after')
    def _one_kind(self):
        self._exactly_one('product_poles', 'rational')
        return self


class FunctionalLiteral(LiteralModel):
    kernel: Optional[GermLiteral] = None
    point: Optional[List[ComplexValue]] = None
    nodes: Optional[PositiveInt] = None

    @model_validator(mode='after')
    def _one_kind(self):
        self._exactly_one('kernel', 'point')
        return self


class RandomGermLiteral(LiteralModel):
    terms: PositiveInt = 2
    poles: PositiveInt = 2
    pole_radius: PositiveFloat = 0.5


class MultiplierSourceLiteral(LiteralModel):
    laurent_poles: Optional[List[ComplexValue]] = None
    taylor_rational: Optional[RationalLiteral] = None
    laurent_rational: Optional[RationalLiteral] = None
    sequence: Optional[SeriesLiteral] = None
    functional: Optional[FunctionalLiteral] = None
    random: Optional[RandomGermLiteral] = None
    identity: bool = False
    zero: bool = False

    @model_validator(mode='after')
    def _one_kind(self):
        self._exactly_one('laurent_poles', 'taylor_rational', 'laurent_rational', 'sequence',
                          'functional', 'random', 'identity', 'zero')
        return self


class MultiplierLiteral(LiteralModel):
    source: MultiplierSourceLiteral


class GeometricDeltaLiteral(LiteralModel):
    kind: Literal['geometric'] = 'geometric'
    ratio: float = Field(gt=0.0, lt=1.0)
    length: Optional[NonNegativeInt] = None


DeltaLiteral = Union[GeometricDeltaLiteral, List[PositiveFloat]]


class ZGridLiteral(LiteralModel):
    """Explicit points, or the grid of a closed polydisc of the given radius off 𝒩."""
    points: Optional[List[List[ComplexValue]]] = None
    radius: PositiveFloat = 1.0
    radii: PositiveInt = 2
    angles: PositiveInt = 4


class SeminormLiteral(LiteralModel):
    kind: Literal['germ', 'uniform', 'functional', 'probe_s', 'probe_b'] = 'germ'
    max_order: NonNegativeInt = 1
    expected: Optional[float] = None


class BenchLiteral(LiteralModel):
    pole: ComplexValue = (0.3, 0.0)
    radius: PositiveFloat = 1.0
    nodes: List[PositiveInt] = Field(default_factory=lambda: [8, 16, 32, 64], min_length=1)


class ExperimentConfig(LiteralModel):
    name: str = 'experiment'
    domain: DomainLiteral
    box: List[NonNegativeInt] = Field(min_length=1)
    multiplier: Optional[MultiplierLiteral] = None
    second: Optional[MultiplierLiteral] = None
    functional: Optional[FunctionalLiteral] = None
    germ: Optional[GermLiteral] = None
    series: Optional[SeriesLiteral] = None
    delta: Optional[DeltaLiteral] = None
    compact: Optional[CompactLiteral] = None
    z_grid: ZGridLiteral = Field(default_factory=ZGridLiteral)
    seminorm: SeminormLiteral = Field(default_factory=SeminormLiteral)
    bench: BenchLiteral = Field(default_factory=BenchLiteral)
    samples: PositiveInt = 4
    settings: Dict[str, Any] = Field(default_factory=dict)

    @model_validator(mode='after')
    def _dimensions(self):
        if len(self.box) != len(self.domain.factors):
            raise ValueError(f"box of length {len(self.box)} for a domain of dimension {len(self.domain.factors)}")
        return self

    @property
    def dim(self) -> int:
        return len(self.domain.factors)

    @classmethod
    def parse(cls, raw: Dict[str, Any]) -> 'ExperimentConfig':
        """Validate raw JSON data; errors carry the JSON path of the first problem"""
        try:
            return cls.model_validate(raw)
        except ValidationError as e:
            error = e.errors()[0]
            raise ConfigValidationError(error['msg'], path=render_location(error['loc']))

    @classmethod
    def load(cls, path: Union[str, Path], overrides: Optional[Dict[str, Any]] = None) -> 'ExperimentConfig':
        """Read an experiment file, apply top-level overrides, then validate"""
        return cls.parse(read_experiment(path, overrides))


def read_experiment(path: Union[str, Path], overrides: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    try:
        raw = json.loads(Path(path).read_text(encoding='utf-8'))
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigSourceError(f"Cannot read experiment file {path}: {e}")
    if not isinstance(raw, dict):
        raise ConfigValidationError("experiment file must hold a JSON object", path='.')
    for key, value in (overrides or {}).items():
        if value is not None:
            raw[key] = value
    return raw
