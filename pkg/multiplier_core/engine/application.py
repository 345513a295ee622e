"""
Applying multipliers

Three ways to compute M(f)(z): the coefficientwise product, the contour formula
with a Laurent germ at (∞,…,∞), and the contour formula with a Taylor germ at the
origin over the inverted contour. Points on the coordinate hyperplanes are handled
by a Cauchy mean over small circles in the vanishing coordinates.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from utils import logger

from ..domains import Circle, Disc, PolyContour, ProductDomain, snug_polycontour
from ..duality import Germ
from ..exceptions import (
    BoxError,
    ContourPlacementError,
    DomainMembershipError,
    HyperplaneError,
    UnsupportedGeometryError,
)
from ..quadrature import (
    QuadratureGrid,
    balanced_ratio,
    default_nodes,
    resolve_nodes,
    sample,
    trapezoid_error_estimate,
)
from ..series import MultiIndex, Point, TaylorPoly, TruncationBox, as_point, hadamard, monomial_tensor
from ..settings import quadrature_setting, tolerance_setting
from ..tolerances import relative_errors
from .multiplier import Multiplier, ProvenanceKind

Evaluable = Callable[[np.ndarray], np.ndarray]


def _require_inside(domain: ProductDomain, z: Point) -> None:
    if z.dim != domain.dim:
        raise DomainMembershipError(f"Point of dimension {z.dim} for a domain of dimension {domain.dim}")
    if not domain.contains(z):
        raise DomainMembershipError(f"{z.coords} is not in the domain")


def _require_off_hyperplanes(z: Point) -> None:
    if z.on_hyperplane():
        raise HyperplaneError(f"{z.coords} lies on a coordinate hyperplane; use evaluate_at")


def laurent_contour(germ: Germ, domain: ProductDomain, z: Point, box: TruncationBox | None = None,
                    nodes=None, margin: float | None = None) -> PolyContour:
    """Contour inside z⁻¹Ω winding once around the germ's supports.

    When the integrand is a polynomial of known box the circles are pulled towards
    the supports as far as the node count allows.
    """
    ratio = np.inf
    if box is not None:
        counts = resolve_nodes(nodes, domain.dim, box)
        ratio = balanced_ratio(min(counts), max(box.degree_bounds))
    return snug_polycontour(list(germ.supports), domain.inverse_scale(z), ratio, margin)


def _placement_error(germ: Germ, scaled: ProductDomain, contour: PolyContour, counts: tuple[int, ...],
                     box: TruncationBox | None, entire: bool) -> float:
    centers = [circles[0].center for circles in contour.factors]
    inner = [germ.support_radius(j, c) for j, c in enumerate(centers)]
    outer = None
    if not entire:
        outer = [f.radius if isinstance(f, Disc) and f.center == c else np.inf
                 for f, c in zip(scaled.factors, centers)]
    degrees = box.degree_bounds if box is not None else None
    return trapezoid_error_estimate(contour, counts, inner, outer, degrees)


def placed_contour(germ: Germ, domain: ProductDomain, z: Point, box: TruncationBox | None = None,
                   nodes=None, entire: bool = False) -> tuple[PolyContour, tuple[int, ...]]:
    """Laurent-side contour and node counts whose predicted error meets the tolerance.

    Without `nodes` the count doubles from the box default up to `max_nodes`.
    `entire` says the other factor of the integrand has no singularities, so the
    boundary of z⁻¹Ω does not limit the rule.

    Raises:
        ContourPlacementError: the requested nodes, or `max_nodes`, cannot resolve
            the separation between the supports and the boundary of z⁻¹Ω
    """
    scaled = domain.inverse_scale(z)
    tolerance = tolerance_setting.tolerance
    if nodes is not None:
        counts = resolve_nodes(nodes, domain.dim, box)
        contour = laurent_contour(germ, domain, z, box, counts)
        error = _placement_error(germ, scaled, contour, counts, box, entire)
        if error > tolerance:
            raise ContourPlacementError(
                f"Nodes {counts} give a predicted error {error:.2e} above {tolerance:g} at z = {z.coords}"
            )
        return contour, counts

    target = tolerance * quadrature_setting.placement_margin
    count = default_nodes(box)
    error = np.inf
    while count <= quadrature_setting.max_nodes:
        counts = (count,) * domain.dim
        contour = laurent_contour(germ, domain, z, box, counts)
        error = _placement_error(germ, scaled, contour, counts, box, entire)
        if error <= target:
            logger.debug(f"Placed {count} nodes per circle at z = {z.coords}: predicted error {error:.2e}")
            return contour, counts
        count *= 2
    raise ContourPlacementError(
        f"Supports and the boundary of z⁻¹Ω at z = {z.coords} are too close: predicted error "
        f"{error:.2e} with {quadrature_setting.max_nodes} nodes per circle"
    )


def _box_of(f) -> TruncationBox | None:
    return f.box if isinstance(f, TaylorPoly) else None


def apply_sequence(multiplier: Multiplier, f: TaylorPoly) -> TaylorPoly:
    """Σ m_α f_α ζ^α on the intersection of the boxes."""
    return hadamard(multiplier.as_series(), f)


def apply_laurent(psi: Germ, f: Evaluable, z, domain: ProductDomain, nodes=None) -> complex:
    """(1/2πi)ⁿ ∮ f(zζ) ψ(ζ) dζ over a contour in z⁻¹Ω around ψ's supports."""
    z = as_point(z)
    _require_off_hyperplanes(z)
    _require_inside(domain, z)
    box = _box_of(f)
    contour, counts = placed_contour(psi, domain, z, box, nodes, entire=box is not None)
    grid = QuadratureGrid(contour, counts)
    points = grid.points()
    values = sample(f, points * z.as_array()) * sample(psi, points)
    return grid.integrate(values)


def apply_taylor(psi_hat: Germ, f: Evaluable, z, domain: ProductDomain, nodes=None) -> complex:
    """(-1/2πi)ⁿ ∮_{1/γ} f(z/ζ) ψ̂(ζ)/ζ dζ with γ placed as for the paired Laurent germ."""
    if psi_hat.side != 'taylor':
        raise UnsupportedGeometryError("apply_taylor needs a germ at the origin")
    z = as_point(z)
    _require_off_hyperplanes(z)
    _require_inside(domain, z)
    box = _box_of(f)
    contour, counts = placed_contour(psi_hat, domain, z, box, nodes, entire=box is not None)
    grid = QuadratureGrid(contour.inverted(), counts)
    points = grid.points()
    values = sample(f, z.as_array() / points) * sample(psi_hat, points) / np.prod(points, axis=-1)
    return (-1) ** z.dim * grid.integrate(values)


def _evaluate_off(multiplier: Multiplier, f, z: Point, nodes) -> complex:
    kind = multiplier.kind
    if kind is ProvenanceKind.TAYLOR_GERM:
        return apply_taylor(multiplier.provenance.source, f, z, multiplier.domain, nodes)
    if kind is ProvenanceKind.SEQUENCE:
        if isinstance(f, TaylorPoly):
            return apply_sequence(multiplier, f).evaluate(z)
        return apply_laurent(multiplier.truncated_germ(), f, z, multiplier.domain, nodes)
    return apply_laurent(multiplier.laurent_kernel(), f, z, multiplier.domain, nodes)


@dataclass(frozen=True)
class HyperplaneMean:
    """Circles of radius half the distance to ∂Ωⱼ around the vanishing coordinates."""
    z: Point
    coordinates: tuple[int, ...]
    grid: QuadratureGrid

    @classmethod
    def around(cls, domain: ProductDomain, z: Point, nodes: int | None = None) -> "HyperplaneMean":
        nodes = nodes or quadrature_setting.hyperplane_nodes
        coordinates = tuple(j for j, c in enumerate(z.coords) if c == 0)
        distances = domain.boundary_distance(z)
        circles = [Circle(z.coords[j], 0.5 * distances[j]) for j in coordinates]
        # half-step rotation keeps nodes off the real axis
        grid = QuadratureGrid.build(PolyContour.from_circles(circles), nodes, phase=np.pi / nodes)
        return cls(z, coordinates, grid)

    def points(self) -> np.ndarray:
        """Full points with the vanishing coordinates replaced by circle nodes, shape grid + (n,)."""
        local = self.grid.points()
        full = np.broadcast_to(self.z.as_array(), local.shape[:-1] + (self.z.dim,)).copy()
        full[..., list(self.coordinates)] = local
        return full

    def kernel(self) -> np.ndarray:
        """1/Π(ζⱼ - zⱼ) over the circle nodes."""
        local = self.grid.points()
        centers = np.array([self.z.coords[j] for j in self.coordinates])
        return 1.0 / np.prod(local - centers, axis=-1)

    def mean(self, values: np.ndarray) -> complex:
        return self.grid.integrate(values * self.kernel())


def evaluate_at(multiplier: Multiplier, f, z, nodes=None, hyperplane_nodes: int | None = None) -> complex:
    """M(f)(z) for any z ∈ Ω, using the Cauchy mean on the coordinate hyperplanes."""
    z = as_point(z)
    _require_inside(multiplier.domain, z)
    if not z.on_hyperplane():
        return _evaluate_off(multiplier, f, z, nodes)
    mean = HyperplaneMean.around(multiplier.domain, z, hyperplane_nodes)
    points = mean.points()
    flat = points.reshape(-1, z.dim)
    if multiplier.kind is ProvenanceKind.SEQUENCE and isinstance(f, TaylorPoly):
        values = apply_sequence(multiplier, f).evaluate(flat)
    else:
        values = np.array([_evaluate_off(multiplier, f, Point(tuple(p)), nodes) for p in flat])
    logger.debug(f"Hyperplane mean at {z.coords} over {flat.shape[0]} points")
    return mean.mean(values.reshape(points.shape[:-1]))


# monomial responses


def _response_off(multiplier: Multiplier, z: Point, box: TruncationBox, nodes) -> np.ndarray:
    """M(ζ^α)(z) for all α in the box at z off the hyperplanes."""
    powers = monomial_tensor(z, box)
    kind = multiplier.kind
    if kind is ProvenanceKind.SEQUENCE:
        return multiplier.sequence_on(box) * powers
    domain = multiplier.domain
    if kind is ProvenanceKind.TAYLOR_GERM:
        germ = multiplier.provenance.source
        contour, counts = placed_contour(germ, domain, z, box, nodes, entire=True)
        grid = QuadratureGrid(contour.inverted(), counts)
        points = grid.points()
        values = sample(germ, points) / np.prod(points, axis=-1)
        return (-1) ** z.dim * powers * grid.moment_tensor(values, box, sign=-1)
    germ = multiplier.laurent_kernel()
    contour, counts = placed_contour(germ, domain, z, box, nodes, entire=True)
    grid = QuadratureGrid(contour, counts)
    values = sample(germ, grid.points())
    return powers * grid.moment_tensor(values, box)


def monomial_response(multiplier: Multiplier, z, box: TruncationBox | None = None, nodes=None,
                      hyperplane_nodes: int | None = None) -> tuple[np.ndarray, np.ndarray]:
    """(M(ζ^α)(z), natural |ζ^α| magnitude) over the box from one kernel sample per point.

    Off the hyperplanes the magnitude is |z^α|; on them it is the largest |ζ^α| over
    the Cauchy-mean nodes.
    """
    z = as_point(z)
    box = box or multiplier.box
    _require_inside(multiplier.domain, z)
    if not z.on_hyperplane():
        return _response_off(multiplier, z, box, nodes), np.abs(monomial_tensor(z, box))
    mean = HyperplaneMean.around(multiplier.domain, z, hyperplane_nodes)
    points = mean.points().reshape(-1, z.dim)
    node_weights = _flat_weights(mean.grid) * mean.kernel().ravel()
    response = np.zeros(box.shape, dtype=complex)
    magnitude = np.zeros(box.shape)
    for p, w in zip(points, node_weights):
        point = Point(tuple(p))
        response = response + w * _response_off(multiplier, point, box, nodes)
        magnitude = np.maximum(magnitude, np.abs(monomial_tensor(point, box)))
    return response, magnitude


def _flat_weights(grid: QuadratureGrid) -> np.ndarray:
    mesh = np.meshgrid(*grid.weights, indexing='ij')
    return np.prod(np.stack(mesh, axis=-1), axis=-1).ravel()


@dataclass
class EigenReport:
    max_error: float
    worst_alpha: MultiIndex | None
    worst_point: tuple[complex, ...] | None
    checked: int
    errors: list[float] = field(default_factory=list)


def eigencheck(multiplier: Multiplier, z_samples: Sequence, alpha: Sequence[int] | None = None,
               max_order: int | None = None, nodes=None) -> EigenReport:
    """Compare M(ζ^α)(z) with m_α z^α at every sample.

    With `alpha` only that multi-index is checked; otherwise every α in the box with
    |α| ≤ max_order. Errors are relative to max(|m_α z^α|, floor·‖m‖∞·|z^α|).
    """
    box = multiplier.box
    if alpha is not None:
        alpha = tuple(int(a) for a in alpha)
        if not box.contains(alpha):
            raise BoxError(f"{alpha} is outside {box.degree_bounds}")
        mask = np.zeros(box.shape, dtype=bool)
        mask[alpha] = True
    else:
        limit = max_order if max_order is not None else box.diameter
        mask = box.total_degree_mask(limit)
    sequence_norm = float(np.max(np.abs(multiplier.sequence))) if multiplier.sequence.size else 0.0

    report = EigenReport(max_error=0.0, worst_alpha=None, worst_point=None, checked=0)
    for z in z_samples:
        z = as_point(z)
        response, magnitude = monomial_response(multiplier, z, box, nodes)
        expected = multiplier.sequence * monomial_tensor(z, box)
        errors = np.where(mask, relative_errors(response, expected, scale=sequence_norm * magnitude), -1.0)
        worst = np.unravel_index(int(np.argmax(errors)), box.shape)
        error = float(errors[worst])
        report.errors.append(error)
        report.checked += int(mask.sum())
        if report.worst_alpha is None or error > report.max_error:
            report.max_error = error
            report.worst_alpha = tuple(int(i) for i in worst)
            report.worst_point = z.coords
    logger.debug(f"Eigencheck over {len(report.errors)} points: max error {report.max_error:.3e}")
    return report
