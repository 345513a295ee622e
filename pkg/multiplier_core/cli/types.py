"""
Type definitions for runner results.
"""

import json
from typing import Any, Optional, TypedDict

from pydantic import BaseModel, Field, field_validator


# Identity checked by a report row -> what it asserts. Every row carries one tag.
ANCHORS: dict[str, str] = {
    'monomial-eigenvector': 'M(ζ^α)(z) = m_α z^α for every monomial in the box',
    'laurent-contour-formula': 'M(f)(z) by the contour formula with the Laurent germ at (∞,…,∞)',
    'taylor-contour-formula': 'M(f)(z) by the inverted contour formula with the Taylor germ at 0',
    'hyperplane-cauchy-mean': 'M(f)(z) for z on a coordinate hyperplane by the Cauchy mean',
    'functional-multiplier-isomorphism': 'm_α = T(ζ^α) and T = δ_(1,…,1)∘M are mutually inverse',
    'composition-homomorphism': 'composition of multipliers is the coefficientwise product',
    'cauchy-transform-duality': 'T ↦ f_T ↦ T_(f_T) preserves the action of T',
    'moment-sequence': 'the moments T(ζ^α) of an analytic functional',
    'cauchy-coefficient-extraction': 'Taylor coefficients by the Cauchy integral over a polycircle',
    'spectral-convergence': 'trapezoidal rule error decays geometrically in the node count',
    'delta-seminorm': 'weighted derivative supremum |f|_(V,δ) and its uniform versions',
    'test-family-bound': 'supremum of |M(h)| over a bounded test family on a compact',
    'plumbing': 'runner plumbing without a mathematical identity',
}


class ErrorResponse(TypedDict):
    error: str


class ConfigErrorResponse(ErrorResponse):
    path: Optional[str]


class CheckRow(BaseModel):
    check: str
    anchor: str
    max_error: Optional[float] = None
    tolerance: float
    passed: bool
    detail: str = ''

    @field_validator('anchor')
    @classmethod
    def _known_anchor(cls, value: str) -> str:
        if value not in ANCHORS:
            raise ValueError(f"Unknown anchor tag {value!r}")
        return value


class Environment(BaseModel):
    dim: int
    box: list[int]
    nodes: Optional[list[int]] = None
    z_grid_size: int = 0
    grid_radii: int
    grid_angles: int
    seed: int
    tolerance: float


class RunReport(BaseModel):
    command: str
    name: str
    rows: list[CheckRow] = Field(default_factory=list)
    environment: Environment

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)

    def to_json(self) -> str:
        """Byte-stable JSON: sorted keys, no timestamps."""
        data = self.model_dump(mode='json')
        data['passed'] = self.passed
        return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + '\n'


class Table(BaseModel):
    header: list[str]
    rows: list[list[Any]] = Field(default_factory=list)


class CommandResult(TypedDict):
    report: RunReport
    table: Optional[Table]
