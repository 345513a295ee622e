"""
Trapezoidal quadrature on circles and polycircles

Every contour formula of the engine reduces to the tensor trapezoidal rule
built here. Integrals are normalized by (2πi)ⁿ. Reductions contract one axis at
a time in a fixed order, so repeated runs are bit-identical.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Sequence

import numpy as np

from utils import logger

from .domains import PolyContour
from .exceptions import ContourPlacementError, NodeCountError
from .series import Point, TaylorPoly, TruncationBox, as_point
from .settings import quadrature_setting
from .tolerances import next_power_of_two

Evaluable = Callable[[np.ndarray], np.ndarray]

MIN_NODES = 4


def default_nodes(box: TruncationBox | None = None) -> int:
    """max(min_nodes, 2(max Dⱼ + 1)) rounded up to a power of two."""
    needed = quadrature_setting.min_nodes
    if box is not None:
        needed = max(needed, 2 * (max(box.degree_bounds) + 1))
    return next_power_of_two(needed)


def resolve_nodes(nodes: int | Sequence[int] | None, dim: int, box: TruncationBox | None = None) -> tuple[int, ...]:
    if nodes is None:
        nodes = default_nodes(box)
    if isinstance(nodes, (int, np.integer)):
        nodes = (int(nodes),) * dim
    nodes = tuple(int(n) for n in nodes)
    if len(nodes) != dim:
        raise NodeCountError(f"Expected {dim} node counts, got {len(nodes)}")
    if any(n < MIN_NODES for n in nodes):
        raise NodeCountError(f"Node counts must be at least {MIN_NODES}, got {nodes}")
    return nodes


def sample(g: Evaluable, points: np.ndarray) -> np.ndarray:
    """Evaluate g on a tensor of points of shape (..., n); singular samples are placement errors."""
    try:
        with np.errstate(divide='ignore', invalid='ignore', over='ignore'):
            values = np.asarray(g(points), dtype=complex)
    except ZeroDivisionError as e:
        raise ContourPlacementError(f"Integrand is singular on the contour: {e}") from e
    if values.shape != points.shape[:-1]:
        values = np.broadcast_to(values, points.shape[:-1])
    if not np.all(np.isfinite(values)):
        raise ContourPlacementError("Integrand is not finite on the contour nodes")
    return values


def _tensor_points(axes: Sequence[np.ndarray]) -> np.ndarray:
    mesh = np.meshgrid(*axes, indexing='ij')
    return np.stack(mesh, axis=-1)


@dataclass(frozen=True)
class QuadratureGrid:
    """Tensor trapezoidal rule over a polycontour.

    Nodes of the circles of one factor are concatenated along that factor's axis;
    weights (radius/N)·e^{iθ_k}·orientation turn sums into (1/2πi)∮ · dζ.
    """
    contour: PolyContour
    nodes: tuple[int, ...]
    phase: float = 0.0

    @classmethod
    def build(cls, contour: PolyContour, nodes: int | Sequence[int] | None = None,
              phase: float = 0.0, box: TruncationBox | None = None) -> "QuadratureGrid":
        return cls(contour, resolve_nodes(nodes, contour.dim, box), phase)

    @property
    def dim(self) -> int:
        return self.contour.dim

    @cached_property
    def axes(self) -> tuple[np.ndarray, ...]:
        return tuple(
            np.concatenate([c.nodes(n, self.phase) for c in factor])
            for factor, n in zip(self.contour.factors, self.nodes)
        )

    @cached_property
    def weights(self) -> tuple[np.ndarray, ...]:
        result = []
        for factor, n in zip(self.contour.factors, self.nodes):
            theta = 2.0 * np.pi * np.arange(n) / n + self.phase
            result.append(np.concatenate([
                c.orientation * (c.radius / n) * np.exp(1j * theta) for c in factor
            ]))
        return tuple(result)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.axes)

    def points(self) -> np.ndarray:
        """Grid nodes, shape shape + (n,)."""
        return _tensor_points(self.axes)

    def sample(self, g: Evaluable) -> "Sampled":
        return Sampled(self, sample(g, self.points()))

    def integrate(self, values: np.ndarray) -> complex:
        return complex(contract_axes(values, self.weights))

    def power_matrices(self, box: TruncationBox, shift: int = 0, sign: int = 1) -> tuple[np.ndarray, ...]:
        """Per-axis matrices w_k ζ_k^(sign·(a + shift)) for a = 0…Dⱼ."""
        return tuple(
            w[:, None] * np.power.outer(axis, sign * (np.arange(d + 1) + shift))
            for axis, w, d in zip(self.axes, self.weights, box.degree_bounds)
        )

    def moment_tensor(self, values: np.ndarray, box: TruncationBox, shift: int = 0, sign: int = 1) -> np.ndarray:
        """(1/2πi)ⁿ ∮ ζ^(sign·(α + shift)) g(ζ) dζ for every α in the box, from one sample tensor."""
        return contract_axes(values, self.power_matrices(box, shift, sign))


def contract_axes(values: np.ndarray, matrices: Sequence[np.ndarray]) -> np.ndarray:
    """Σ values[k₁…kₙ] Π Aⱼ[kⱼ, aⱼ] with Aⱼ of shape (Mⱼ,) or (Mⱼ, Bⱼ).

    Contracts the last grid axis first; output axes follow the order of `matrices`.
    """
    result = np.asarray(values)
    for j in range(len(matrices) - 1, -1, -1):
        # grid axes 0..j are still in front; output axes pile up at the end
        result = np.tensordot(result, matrices[j], axes=([j], [0]))
    if result.ndim > 1:
        result = np.transpose(result, tuple(range(result.ndim - 1, -1, -1)))
    return result


@dataclass(frozen=True)
class Sampled:
    """Integrand samples aligned with a quadrature grid."""
    grid: QuadratureGrid
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=complex)
        if values.shape != self.grid.shape:
            raise ContourPlacementError(f"Samples of shape {values.shape} do not match grid {self.grid.shape}")
        if not np.all(np.isfinite(values)):
            raise ContourPlacementError("Samples are not finite")
        object.__setattr__(self, 'values', values)

    def integrate(self) -> complex:
        return self.grid.integrate(self.values)

    def moments(self, box: TruncationBox, shift: int = 0) -> np.ndarray:
        return self.grid.moment_tensor(self.values, box, shift)


def contour_integral(g: Evaluable, contour: PolyContour, nodes: int | Sequence[int] | None = None) -> complex:
    """(1/2πi)ⁿ ∮_γ g(ζ) dζ by the tensor trapezoidal rule."""
    grid = QuadratureGrid.build(contour, nodes)
    return grid.sample(g).integrate()


def _circle_spectrum(f: Evaluable, center: Point, radii: Sequence[float], nodes: tuple[int, ...],
                     inverse: bool) -> np.ndarray:
    axes = [c + r * np.exp(2j * np.pi * np.arange(n) / n) for c, r, n in zip(center.coords, radii, nodes)]
    values = sample(f, _tensor_points(axes))
    if inverse:
        return np.fft.ifftn(values)
    return np.fft.fftn(values) / np.prod(nodes)


def _spectral_window(f: Evaluable, center: Point, radii: Sequence[float], box: TruncationBox,
                     nodes, offset: int) -> np.ndarray:
    """Shared Cauchy extraction: spectrum[α + offset] · r^(∓(α + offset)).

    offset 0 reads Taylor coefficients around `center` from the forward transform;
    offset 1 reads (1/2πi)ⁿ ∮ ζ^α f dζ from the inverse transform.
    """
    radii = tuple(float(r) for r in radii)
    if len(radii) != box.dim or center.dim != box.dim:
        raise NodeCountError(f"Radii and center must match the box dimension {box.dim}")
    if any(r <= 0 for r in radii):
        raise ContourPlacementError(f"Extraction radii must be positive, got {radii}")
    nodes = resolve_nodes(nodes, box.dim, box)
    short = [j for j, (n, d) in enumerate(zip(nodes, box.degree_bounds)) if n < 2 * (d + 1)]
    if short:
        raise NodeCountError(
            f"Node counts {nodes} cannot resolve box {box.degree_bounds}: need N_j >= 2(D_j + 1)"
        )
    spectrum = _circle_spectrum(f, center, radii, nodes, inverse=offset > 0)
    window = spectrum[tuple(slice(offset, d + 1 + offset) for d in box.degree_bounds)]
    sign = 1 if offset > 0 else -1
    for axis, (r, d) in enumerate(zip(radii, box.degree_bounds)):
        scale = r ** (sign * (np.arange(d + 1) + offset))
        shape = [1] * box.dim
        shape[axis] = d + 1
        window = window * scale.reshape(shape)
    return window


def taylor_coefficients(f: Evaluable, center, radii: Sequence[float], box: TruncationBox,
                        nodes: int | Sequence[int] | None = None) -> TaylorPoly:
    """Taylor coefficients of f around `center` for the whole box, from one FFT.

    f must be holomorphic on a neighbourhood of the closed polydisc of the given radii.
    """
    center = as_point(center)
    coeffs = _spectral_window(f, center, radii, box, nodes, offset=0)
    return TaylorPoly(coeffs)


def laurent_moments(psi: Evaluable, radii: Sequence[float], box: TruncationBox,
                    nodes: int | Sequence[int] | None = None,
                    singular_radii: Sequence[float] | None = None) -> np.ndarray:
    """m_α = (1/2πi)ⁿ ∮_{|ζⱼ|=rⱼ} ζ^α ψ(ζ) dζ for every α in the box.

    `singular_radii` bounds the moduli of ψ's singularities per variable; radii that do
    not clear them are rejected.
    """
    if singular_radii is not None:
        blocked = [j for j, (r, s) in enumerate(zip(radii, singular_radii)) if r <= s]
        if blocked:
            raise ContourPlacementError(
                f"Moment radii {tuple(radii)} do not clear singularities at {tuple(singular_radii)}"
            )
    center = Point((0.0,) * box.dim)
    logger.debug(f"Laurent moments on radii {tuple(radii)} for box {box.degree_bounds}")
    return _spectral_window(psi, center, radii, box, nodes, offset=1)


def balanced_ratio(nodes: int, order: int) -> float:
    """Circle-to-singularity radius ratio equating aliasing (ρ/r)^N with round-off ε(r/ρ)^order."""
    order = max(int(order), 1)
    eps = np.finfo(float).eps
    return float(np.exp(np.log(nodes / (order * eps)) / (nodes + order)))


def trapezoid_error_estimate(contour: PolyContour, nodes: Sequence[int], inner: Sequence[float],
                             outer: Sequence[float] | None = None,
                             degrees: Sequence[int] | None = None) -> float:
    """Predicted relative error of the tensor trapezoidal rule on a one-circle-per-factor contour.

    Factor j loses (ρⱼ/rⱼ)^Nⱼ to singularities within ρⱼ of the circle center,
    (rⱼ/Rⱼ)^Nⱼ to singularities beyond Rⱼ, and ε(rⱼ/ρⱼ)^Dⱼ to round-off in
    moments of order Dⱼ. Factors with several circles are not estimated.
    """
    eps = np.finfo(float).eps
    total = 0.0
    for j, (circles, n) in enumerate(zip(contour.factors, nodes)):
        if len(circles) != 1:
            continue
        r, rho = circles[0].radius, inner[j]
        if rho >= r:
            return np.inf
        total += (rho / r) ** n
        if outer is not None and np.isfinite(outer[j]):
            if r >= outer[j]:
                return np.inf
            total += (r / outer[j]) ** n
        if degrees is not None and rho > 0.0:
            total += eps * (r / rho) ** degrees[j]
    return float(total)


def local_taylor_coefficients(f: Evaluable, centers: np.ndarray, radii: np.ndarray, box: TruncationBox,
                              nodes: int | Sequence[int] | None = None) -> np.ndarray:
    """Taylor coefficients of f around many centers at once, shape (P,) + box.shape.

    centers and radii have shape (P, n); each point gets its own polycircle.
    """
    centers = np.asarray(centers, dtype=complex).reshape(-1, box.dim)
    radii = np.asarray(radii, dtype=float).reshape(centers.shape)
    if np.any(radii <= 0):
        raise ContourPlacementError("Local extraction radii must be positive")
    nodes = resolve_nodes(nodes, box.dim, box)
    if any(n < 2 * (d + 1) for n, d in zip(nodes, box.degree_bounds)):
        raise NodeCountError(f"Node counts {nodes} cannot resolve box {box.degree_bounds}")
    roots = _tensor_points([np.exp(2j * np.pi * np.arange(n) / n) for n in nodes])
    axes = tuple(range(1, box.dim + 1))
    window = (slice(None),) + tuple(slice(0, d + 1) for d in box.degree_bounds)
    chunk = max(1, quadrature_setting.evaluation_chunk)
    out = np.empty((centers.shape[0],) + box.shape, dtype=complex)
    for start in range(0, centers.shape[0], chunk):
        c = centers[start:start + chunk]
        r = radii[start:start + chunk]
        shape = (c.shape[0],) + (1,) * box.dim + (box.dim,)
        points = c.reshape(shape) + r.reshape(shape) * roots[None]
        spectrum = np.fft.fftn(sample(f, points), axes=axes)[window] / np.prod(nodes)
        for axis, d in enumerate(box.degree_bounds):
            scale = r[:, axis][:, None] ** -np.arange(d + 1)
            shape = [c.shape[0]] + [1] * box.dim
            shape[axis + 1] = d + 1
            spectrum = spectrum * scale.reshape(shape)
        out[start:start + chunk] = spectrum
    return out
