"""
Seminorms on germs and functionals

|f|_{V,δ} weighs the Taylor coefficients of f around the distinguished boundary of
V and of f(1/ζ) at the origin by the cumulative products δ_(|α|). The uniform
version takes the maximum over a grid of a compact K, and the functional version
applies it to the Cauchy transform. Every supremum is a maximum over finitely
many candidates and reports where it was attained.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Literal, Sequence, Union

import numpy as np

from utils import logger

from .domains import CompactBox, ProductDomain
from .duality import AnalyticFunctional, Germ, cauchy_transform_germ
from .engine import Multiplier, check_carrier_membership, evaluate_at, monomial_response
from .exceptions import BoxError, CarrierMembershipError, ContourPlacementError, DimensionMismatchError
from .quadrature import local_taylor_coefficients, taylor_coefficients
from .series import Point, TruncationBox, as_point, index_order_tensor
from .settings import grid_setting

Branch = Literal['boundary', 'infinity']
GermFamily = Union[Germ, Callable[[Point], Germ]]


@dataclass(frozen=True)
class DeltaSequence:
    """Positive weights δ₀ ≥ δ₁ ≥ … ≥ δ_L with cumulative products δ_(k) = δ₀⋯δ_k."""
    values: tuple[float, ...]

    def __post_init__(self):
        values = tuple(float(v) for v in self.values)
        if not values:
            raise BoxError("A δ-sequence needs at least one term")
        if any(not v > 0 for v in values):
            raise BoxError(f"δ-sequence terms must be positive, got {values}")
        if any(b > a for a, b in zip(values, values[1:])):
            raise BoxError("δ-sequence terms must be non-increasing")
        if len(values) > 1 and not values[-1] < values[0]:
            raise BoxError("δ-sequence must decrease over its window")
        object.__setattr__(self, 'values', values)

    @classmethod
    def geometric(cls, ratio: float, length: int) -> "DeltaSequence":
        """δ_k = ratio^k for k = 0…length."""
        if not 0.0 < ratio < 1.0:
            raise BoxError(f"Geometric δ-sequence needs 0 < ratio < 1, got {ratio}")
        return cls(tuple(ratio ** k for k in range(int(length) + 1)))

    @classmethod
    def for_box(cls, box: TruncationBox, ratio: float = 0.5, extra: int | None = None) -> "DeltaSequence":
        """Geometric window long enough for |α| + n over the box."""
        extra = box.dim if extra is None else extra
        return cls.geometric(ratio, box.diameter + extra)

    @classmethod
    def from_literal(cls, literal: dict | Sequence[float], box: TruncationBox | None = None) -> "DeltaSequence":
        """{"kind": "geometric", "ratio": q, "length": L} or an explicit list."""
        if isinstance(literal, dict):
            length = literal.get('length')
            if length is None:
                if box is None:
                    raise BoxError("Geometric δ-sequence without length needs a box")
                length = box.diameter + box.dim
            return cls.geometric(float(literal['ratio']), int(length))
        return cls(tuple(literal))

    @property
    def length(self) -> int:
        return len(self.values) - 1

    @property
    def cumulative(self) -> np.ndarray:
        return np.cumprod(np.asarray(self.values))

    def cumulative_at(self, k: int) -> float:
        if not 0 <= k <= self.length:
            raise BoxError(f"δ_({k}) is outside the window 0…{self.length}")
        return float(self.cumulative[k])

    def weights(self, box: TruncationBox, shift: int = 0) -> np.ndarray:
        """δ_(|α| + shift) at every α of the box."""
        needed = box.diameter + shift
        if needed > self.length:
            raise BoxError(f"δ-window of length {self.length} is too short for |α| + {shift} up to {needed}")
        return self.cumulative[index_order_tensor(box) + shift]


@dataclass
class SeminormReport:
    value: float
    branch: Branch | None
    alpha: tuple[int, ...] | None
    point: tuple[complex, ...] | None
    truncation_box: TruncationBox
    z: tuple[complex, ...] | None = None
    z_grid_size: int = 1


def _laurent_side(germ: Germ) -> Germ:
    return germ if germ.side == 'laurent' else germ.paired()


def _support_distance(germ: Germ, points: np.ndarray) -> np.ndarray:
    """Per point and variable, distance to the germ's support discs; shape (P, n)."""
    distances = np.empty(points.shape, dtype=float)
    for j, discs in enumerate(germ.supports):
        if not discs:
            distances[:, j] = 1.0
            continue
        gaps = [np.abs(points[:, j] - d.center) - d.radius for d in discs]
        distances[:, j] = np.min(np.stack(gaps), axis=0)
    return distances


def _boundary_branch(germ: Germ, domain: ProductDomain, weights: np.ndarray, box: TruncationBox,
                     points_per_circle: int, fraction: float, nodes) -> tuple[float, tuple, tuple]:
    contour = domain.distinguished_boundary()
    points = np.stack(np.meshgrid(*[
        np.concatenate([c.nodes(points_per_circle) for c in factor]) for factor in contour.factors
    ], indexing='ij'), axis=-1).reshape(-1, domain.dim)
    distances = _support_distance(germ, points)
    if np.any(distances <= 0):
        raise ContourPlacementError(f"Germ singularities reach the distinguished boundary of {domain}")
    radii = fraction * np.where(np.isfinite(distances), distances, 1.0)
    coefficients = local_taylor_coefficients(germ, points, radii, box, nodes)
    weighted = np.abs(coefficients) * weights[None]
    flat = int(np.argmax(weighted))
    p, *alpha = np.unravel_index(flat, weighted.shape)
    return float(weighted.reshape(-1)[flat]), tuple(int(a) for a in alpha), tuple(complex(c) for c in points[p])


def _infinity_branch(germ: Germ, domain: ProductDomain, weights: np.ndarray, box: TruncationBox,
                     nodes) -> tuple[float, tuple]:
    radii = tuple(0.5 / f.outer_radius() for f in domain.factors)

    def at_inverse(points: np.ndarray) -> np.ndarray:
        return germ.evaluate(1.0 / points)

    coefficients = taylor_coefficients(at_inverse, Point((0.0,) * domain.dim), radii, box, nodes).coeffs
    weighted = np.abs(coefficients) * weights
    flat = int(np.argmax(weighted))
    alpha = np.unravel_index(flat, weighted.shape)
    return float(weighted.reshape(-1)[flat]), tuple(int(a) for a in alpha)


def germ_seminorm(germ: Germ, domain: ProductDomain, delta: DeltaSequence, box: TruncationBox,
                  points_per_circle: int | None = None, radius_fraction: float | None = None,
                  nodes=None) -> SeminormReport:
    """|f|_{V,δ}: max of the boundary and infinity branches over the box.

    The boundary branch reads Taylor coefficients on small polycircles around a
    uniform grid of ∂₀V, each of radius `radius_fraction` times the distance to the
    germ's singularities. The infinity branch reads those of f(1/ζ) at the origin.
    Ties go to the boundary branch.
    """
    if germ.dim != domain.dim or box.dim != domain.dim:
        raise DimensionMismatchError(f"Germ, domain and box dimensions differ: {germ.dim}, {domain.dim}, {box.dim}")
    germ = _laurent_side(germ)
    points_per_circle = points_per_circle or grid_setting.boundary_points
    fraction = radius_fraction or grid_setting.local_radius_fraction
    weights = delta.weights(box)

    value, alpha, point = _boundary_branch(germ, domain, weights, box, points_per_circle, fraction, nodes)
    report = SeminormReport(value, 'boundary', alpha, point, box)
    at_infinity, alpha_inf = _infinity_branch(germ, domain, weights, box, nodes)
    if at_infinity > value:
        report = SeminormReport(at_infinity, 'infinity', alpha_inf, None, box)
    return report


def _k_grid(compact: CompactBox, radii: int | None, angles: int | None) -> np.ndarray:
    points = compact.grid(radii or grid_setting.radii, angles or grid_setting.angles, exclude_hyperplanes=True)
    if points.shape[0] == 0:
        raise CarrierMembershipError(f"The grid of {compact} lies entirely on the coordinate hyperplanes")
    return points


def uniform_germ_seminorm(family: GermFamily, domain: ProductDomain, compact: CompactBox, delta: DeltaSequence,
                          box: TruncationBox, radii: int | None = None, angles: int | None = None,
                          points_per_circle: int | None = None, nodes=None) -> SeminormReport:
    """υ_{K,δ}(f) = max over z in the K-grid off 𝒩 of |f_(z)|_{z⁻¹Ω,δ}.

    `family` is a germ, standing for all of its own extensions, or a map z ↦ f_(z).
    """
    grid = _k_grid(compact, radii, angles)
    if isinstance(family, Germ):
        check_carrier_membership(_laurent_side(family), domain, points=grid)
    best: SeminormReport | None = None
    for z in grid:
        z = Point(tuple(z))
        germ = family if isinstance(family, Germ) else family(z)
        target = domain.inverse_scale(z)
        if not isinstance(family, Germ) and not _laurent_side(germ).compactly_inside(target):
            raise CarrierMembershipError(f"The extension at z = {z.coords} is singular in z⁻¹Ω")
        report = germ_seminorm(germ, target, delta, box, points_per_circle, nodes=nodes)
        if best is None or report.value > best.value:
            best = report
            best.z = z.coords
    best.z_grid_size = int(grid.shape[0])
    logger.debug(f"Uniform seminorm {best.value:.6g} over {grid.shape[0]} points of K")
    return best


def functional_seminorm(functional: AnalyticFunctional, domain: ProductDomain, compact: CompactBox,
                        delta: DeltaSequence, box: TruncationBox, radii: int | None = None,
                        angles: int | None = None, points_per_circle: int | None = None,
                        nodes=None) -> SeminormReport:
    """|T|_{K,δ} = υ_{K,δ}(f_T)"""
    return uniform_germ_seminorm(cauchy_transform_germ(functional), domain, compact, delta, box,
                                 radii, angles, points_per_circle, nodes)


# boundedness probes


@dataclass
class ProbeReport:
    family: Literal['S', 'B']
    value: float
    alpha: tuple[int, ...] | None
    point: tuple[complex, ...] | None
    evaluations: int
    parameters: dict[str, Any] = field(default_factory=dict)


def _probe_monomials(multiplier: Multiplier, grid: np.ndarray, delta: DeltaSequence, box: TruncationBox,
                     nodes) -> ProbeReport:
    weights = delta.weights(box, shift=multiplier.dim)
    report = ProbeReport('S', 0.0, None, None, 0)
    for y in grid:
        y = Point(tuple(y))
        response, _ = monomial_response(multiplier, y, box, nodes)
        weighted = np.abs(response) * weights
        flat = int(np.argmax(weighted))
        report.evaluations += weighted.size
        if report.alpha is None or weighted.reshape(-1)[flat] > report.value:
            report.value = float(weighted.reshape(-1)[flat])
            report.alpha = tuple(int(a) for a in np.unravel_index(flat, weighted.shape))
            report.point = y.coords
    return report


def cauchy_test_function(alpha: Sequence[int], w: Point, s: Point, weight: float = 1.0):
    """ζ ↦ weight / Π (wⱼ - ζⱼ/sⱼ)^(αⱼ+1)"""
    exponents = np.asarray(alpha) + 1
    wa, sa = w.as_array(), s.as_array()

    def h(points: np.ndarray) -> np.ndarray:
        return weight / np.prod((wa - np.asarray(points) / sa) ** exponents, axis=-1)

    return h


def _probe_cauchy(multiplier: Multiplier, grid: np.ndarray, delta: DeltaSequence, max_order: int,
                  scales: Sequence[Point], boundary_points: int, nodes) -> ProbeReport:
    domain = multiplier.domain
    box = TruncationBox.cube(domain.dim, max_order)
    weights = delta.weights(box)
    mask = box.total_degree_mask(max_order)
    report = ProbeReport('B', 0.0, None, None, 0, {'scales': [s.coords for s in scales]})
    for s in scales:
        boundary = domain.inverse_scale(s).distinguished_boundary()
        ws = np.stack(np.meshgrid(*[
            np.concatenate([c.nodes(boundary_points) for c in factor]) for factor in boundary.factors
        ], indexing='ij'), axis=-1).reshape(-1, domain.dim)
        for alpha in box.indices():
            if not mask[alpha]:
                continue
            for w in ws:
                h = cauchy_test_function(alpha, Point(tuple(w)), s, float(weights[alpha]))
                for y in grid:
                    value = abs(evaluate_at(multiplier, h, Point(tuple(y)), nodes))
                    report.evaluations += 1
                    if report.alpha is None or value > report.value:
                        report.value = float(value)
                        report.alpha = tuple(alpha)
                        report.point = tuple(complex(c) for c in y)
    return report


def boundedness_probe(multiplier: Multiplier, compact: CompactBox, family: Literal['S', 'B'],
                      delta: DeltaSequence, box: TruncationBox | None = None, radii: int | None = None,
                      angles: int | None = None, max_order: int = 1, scales: Sequence | None = None,
                      boundary_points: int = 8, nodes=None) -> ProbeReport:
    """sup over a test family h and the K-grid of |M(h)(y)|.

    'S' runs h_α = δ_(|α|+n) ζ^α over the box; 'B' runs δ_(|α|)/(w - ζ/s)^(α+1)
    for |α| ≤ max_order, s in `scales` (default the unit point) and w on ∂₀(s⁻¹Ω).
    """
    grid = _k_grid(compact, radii, angles)
    if family == 'S':
        report = _probe_monomials(multiplier, grid, delta, box or multiplier.box, nodes)
    elif family == 'B':
        scales = [as_point(s) for s in scales] if scales else [Point.ones(multiplier.dim)]
        report = _probe_cauchy(multiplier, grid, delta, max_order, scales, boundary_points, nodes)
    else:
        raise BoxError(f"Unknown test family {family!r}")
    logger.debug(f"Probe {family}: sup {report.value:.6g} over {report.evaluations} evaluations")
    return report
