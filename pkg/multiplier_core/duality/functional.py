"""
Analytic functionals in quadrature form

T(h) = (1/2πi)ⁿ ∮_γ h(ζ) k(ζ) dζ for a kernel germ k and a polycontour γ winding
once around k's singularities. The kernel is sampled on the contour nodes once
and reused for every action, moment and transform.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Sequence

import numpy as np

from utils import logger

from ..domains import ClosedDisc, CompactBox, PolyContour, ProductDomain, separating_polycontour
from ..exceptions import DimensionMismatchError, RegionError
from ..quadrature import QuadratureGrid, Sampled, contract_axes, sample
from ..series import Point, TruncationBox, as_point, as_points
from ..settings import quadrature_setting
from .germs import CallableGerm, Germ, SeparableGerm


@dataclass(frozen=True, eq=False)
class AnalyticFunctional:
    kernel: Germ
    contour: PolyContour
    nodes: tuple[int, ...] | int | None = None

    def __post_init__(self):
        if self.kernel.dim != self.contour.dim:
            raise DimensionMismatchError(
                f"Kernel of dimension {self.kernel.dim} on a contour of dimension {self.contour.dim}"
            )
        nodes = self.nodes if self.nodes is not None else quadrature_setting.min_nodes
        if isinstance(nodes, (int, np.integer)):
            nodes = (int(nodes),) * self.dim
        object.__setattr__(self, 'nodes', tuple(int(n) for n in nodes))

    # constructors

    @classmethod
    def point_evaluation(cls, a, domain: ProductDomain, nodes=None) -> "AnalyticFunctional":
        """δ_a: kernel Π 1/(ζⱼ - aⱼ) on a contour around a inside the domain."""
        a = as_point(a)
        kernel = SeparableGerm.product_poles(a.coords)
        contour = separating_polycontour([ClosedDisc(c, 0.0) for c in a.coords], domain)
        return cls(kernel, contour, nodes)

    @classmethod
    def from_germ(cls, kernel: Germ, domain: ProductDomain, nodes=None) -> "AnalyticFunctional":
        """T_k with the contour placed between k's supports and ∂Ω."""
        contour = separating_polycontour(list(kernel.supports), domain)
        return cls(kernel, contour, nodes)

    @classmethod
    def zero(cls, domain: ProductDomain, nodes=None) -> "AnalyticFunctional":
        return cls.from_germ(SeparableGerm.zero(domain.dim), domain, nodes)

    @property
    def dim(self) -> int:
        return self.contour.dim

    @cached_property
    def grid(self) -> QuadratureGrid:
        return QuadratureGrid.build(self.contour, self.nodes)

    @cached_property
    def sampled_kernel(self) -> Sampled:
        return self.grid.sample(self.kernel)

    def carrier(self) -> tuple[tuple[ClosedDisc, ...], ...]:
        """Closed discs bounded by the contour, per factor."""
        return self.contour.enclosed_discs()

    def with_contour(self, contour: PolyContour) -> "AnalyticFunctional":
        """Same kernel on a relocated contour (the extension to a larger function space)."""
        return AnalyticFunctional(self.kernel, contour, self.nodes)

    def scaled(self, value: complex) -> "AnalyticFunctional":
        return AnalyticFunctional(self.kernel.scaled(value), self.contour, self.nodes)

    def act(self, h: Callable[[np.ndarray], np.ndarray]) -> complex:
        values = sample(h, self.grid.points())
        return self.grid.integrate(values * self.sampled_kernel.values)

    __call__ = act


def act(functional: AnalyticFunctional, h) -> complex:
    return functional.act(h)


def moments(functional: AnalyticFunctional, box: TruncationBox) -> np.ndarray:
    """m_α = T(ζ^α) for every α in the box, from the shared kernel samples."""
    if box.dim != functional.dim:
        raise DimensionMismatchError(f"Box of dimension {box.dim} for a functional of dimension {functional.dim}")
    return functional.sampled_kernel.moments(box)


def _check_outside(functional: AnalyticFunctional, points: np.ndarray) -> None:
    for j, factor in enumerate(functional.contour.factors):
        wj = points[..., j]
        winding = functional.contour.factor_winding(j, wj)
        on_contour = np.zeros(wj.shape, dtype=bool)
        for circle in factor:
            on_contour |= np.abs(np.abs(wj - circle.center) - circle.radius) <= 1e-12 * circle.radius
        if np.any(winding != 0) or np.any(on_contour):
            raise RegionError(f"Points lie inside or on the contour in variable {j}")


def _cauchy_values(functional: AnalyticFunctional, points: np.ndarray) -> np.ndarray:
    """T(Π 1/(ζⱼ - ·)) at a flat batch of points, shape (P, n)."""
    grid = functional.grid
    # per axis: (P, Mⱼ) matrices w_k / (ζⱼ - u_k)
    matrices = [weights[None, :] / (points[:, j, None] - axis[None, :])
                for j, (axis, weights) in enumerate(zip(grid.axes, grid.weights))]
    result = np.tensordot(functional.sampled_kernel.values, matrices[-1], axes=([grid.dim - 1], [1]))
    for j in range(grid.dim - 2, -1, -1):
        result = np.einsum('...kp,pk->...p', result, matrices[j])
    return result


def cauchy_transform(functional: AnalyticFunctional, zeta) -> complex | np.ndarray:
    """f_T(ζ) = T(Π 1/(ζⱼ - ·)); ζ must lie outside the regions bounded by the contour."""
    single = isinstance(zeta, Point) or np.ndim(zeta) == 1
    points = as_points(zeta, functional.dim).reshape(-1, functional.dim)
    _check_outside(functional, points)
    values = _cauchy_values(functional, points)
    return complex(values[0]) if single else values.reshape(np.shape(zeta)[:-1])


def cauchy_transform_germ(functional: AnalyticFunctional) -> Germ:
    """f_T as a Laurent germ supported on the regions bounded by T's contour."""
    chunk = quadrature_setting.evaluation_chunk
    dim = functional.dim

    def evaluate(points: np.ndarray) -> np.ndarray:
        points = np.asarray(points, dtype=complex)
        flat = points.reshape(-1, dim)
        out = np.empty(flat.shape[0], dtype=complex)
        for start in range(0, flat.shape[0], chunk):
            out[start:start + chunk] = _cauchy_values(functional, flat[start:start + chunk])
        return out.reshape(points.shape[:-1])

    return CallableGerm(evaluate, dim, 'laurent', functional.carrier())


@dataclass
class CarrierReport:
    constant: float
    act_bound: float
    samples: int
    violations: list[int] = field(default_factory=list)


def _sup_norm(h, carrier: PolyContour | CompactBox, nodes: int) -> float:
    if isinstance(carrier, CompactBox):
        points = carrier.grid(nodes // 8 or 1, nodes)
    else:
        points = QuadratureGrid.build(carrier, nodes).points().reshape(-1, carrier.dim)
    return float(np.max(np.abs(sample(h, points))))


def carrier_bound_check(functional: AnalyticFunctional, carrier: PolyContour | CompactBox,
                        sample_functions: Sequence, bound: float | None = None) -> CarrierReport:
    """Empirical C with |T f| ≤ C ‖f‖ on the carrier, over the given sample functions.

    `act_bound` is ‖k‖_γ Π l(γⱼ) / (2π)ⁿ, which bounds |T f| / ‖f‖_γ for every f.
    Samples exceeding `bound` (when given) are reported by index.
    """
    kernel_norm = float(np.max(np.abs(functional.sampled_kernel.values))) if functional.sampled_kernel.values.size else 0.0
    act_bound = kernel_norm * float(np.prod(functional.contour.lengths())) / (2.0 * np.pi) ** functional.dim
    nodes = max(functional.nodes)
    constant = 0.0
    violations = []
    for index, h in enumerate(sample_functions):
        value = abs(functional.act(h))
        norm = _sup_norm(h, carrier, nodes)
        if norm == 0.0:
            continue
        ratio = value / norm
        constant = max(constant, ratio)
        if bound is not None and ratio > bound:
            violations.append(index)
    logger.debug(f"Carrier check over {len(sample_functions)} samples: C = {constant:.6g}")
    return CarrierReport(constant=constant, act_bound=act_bound, samples=len(sample_functions), violations=violations)
