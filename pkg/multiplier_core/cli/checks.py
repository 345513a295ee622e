"""
Invariant battery

Each measure returns the largest error of one identity over the samples it is
given; report rows compare it with the tolerance.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

from ..domains import Circle, PolyContour
from ..duality import AnalyticFunctional, Germ, cauchy_transform_germ, moments
from ..engine import (
    Multiplier,
    ProvenanceKind,
    apply_laurent,
    apply_sequence,
    apply_taylor,
    compose,
    eigencheck,
    evaluate_at,
    functional_from_multiplier,
    multiplier_from_functional,
    sequence_distance,
)
from ..quadrature import contour_integral, taylor_coefficients
from ..series import Point, TaylorPoly, TruncationBox
from ..tolerances import relative_error

# bench errors below this are round-off, not truncation
CONVERGENCE_FLOOR = 1e-13


def laurent_side_kernel(multiplier: Multiplier) -> Germ:
    return multiplier.laurent_kernel() or multiplier.truncated_germ()


def taylor_side_kernel(multiplier: Multiplier) -> Germ:
    if multiplier.kind is ProvenanceKind.TAYLOR_GERM:
        return multiplier.provenance.source
    return laurent_side_kernel(multiplier).paired()


def apply_by(path: str, multiplier: Multiplier, f: TaylorPoly, z: Point, nodes=None) -> complex:
    """M(f)(z) along one of the three application paths."""
    if path == 'sequence':
        return apply_sequence(multiplier, f).evaluate(z)
    if z.on_hyperplane():
        return evaluate_at(multiplier, f, z, nodes)
    if path == 'laurent':
        return apply_laurent(laurent_side_kernel(multiplier), f, z, multiplier.domain, nodes)
    if path == 'taylor':
        return apply_taylor(taylor_side_kernel(multiplier), f, z, multiplier.domain, nodes)
    raise ValueError(f"Unknown application path {path!r}")


def oracle(multiplier: Multiplier, f: TaylorPoly, z: Point) -> tuple[complex, float]:
    """Coefficientwise value Σ m_α f_α z^α and its absolute scale."""
    product = apply_sequence(multiplier, f)
    return product.evaluate(z), product.absolute_scale(z)


def _points(z_points: np.ndarray) -> list[Point]:
    return [Point(tuple(complex(c) for c in z)) for z in z_points]


def eigenvector_error(multiplier: Multiplier, z_points: np.ndarray, nodes=None) -> float:
    return eigencheck(multiplier, _points(z_points), nodes=nodes).max_error


def formula_error(path: str, multiplier: Multiplier, polynomials: Sequence[TaylorPoly], z_points: np.ndarray,
                  nodes=None) -> float:
    worst = 0.0
    for f in polynomials:
        for z in _points(z_points):
            expected, scale = oracle(multiplier, f, z)
            value = apply_by(path, multiplier, f, z, nodes)
            worst = max(worst, relative_error(value, expected, scale=scale))
    return worst


def hyperplane_points(z_points: np.ndarray, count: int = 4) -> np.ndarray:
    """The first samples with their first coordinate moved onto the hyperplane ζ₁ = 0."""
    points = np.array(z_points[:count], dtype=complex, copy=True)
    points[:, 0] = 0.0
    return points


def hyperplane_error(multiplier: Multiplier, f: TaylorPoly, z_points: np.ndarray, nodes=None) -> float:
    worst = 0.0
    for z in _points(hyperplane_points(z_points)):
        expected, scale = oracle(multiplier, f, z)
        value = evaluate_at(multiplier, f, z, nodes)
        worst = max(worst, relative_error(value, expected, scale=scale))
    return worst


def multiplier_roundtrip_error(multiplier: Multiplier, nodes=None) -> float:
    """sequence(Φ(Θ(M))) against sequence(M)"""
    functional = functional_from_multiplier(multiplier, nodes)
    recovered = multiplier_from_functional(functional, multiplier.domain, multiplier.box)
    return sequence_distance(recovered.sequence, multiplier.sequence)


def functional_roundtrip_error(functional: AnalyticFunctional, multiplier_domain, box: TruncationBox,
                               nodes=None) -> float:
    """moments(Θ(Φ(T))) against moments(T)"""
    multiplier = multiplier_from_functional(functional, multiplier_domain, box)
    recovered = functional_from_multiplier(multiplier, nodes)
    return sequence_distance(moments(recovered, box), moments(functional, box))


def duality_error(functional: AnalyticFunctional, domain, box: TruncationBox) -> float:
    """moments(T_(f_T)) against moments(T)"""
    transformed = AnalyticFunctional.from_germ(cauchy_transform_germ(functional), domain, functional.nodes)
    return sequence_distance(moments(transformed, box), moments(functional, box))


def composite_sequence_error(first: Multiplier, second: Multiplier, composite: Multiplier) -> float:
    box = composite.box
    expected = first.sequence_on(box) * second.sequence_on(box)
    return float(np.max(np.abs(composite.sequence - expected))) if expected.size else 0.0


def composition_error(first: Multiplier, second: Multiplier, polynomials: Sequence[TaylorPoly],
                      z_points: np.ndarray, nodes=None) -> float:
    """Contour action of first∘second against first applied to second(f)."""
    composite = compose(first, second, nodes)
    worst = composite_sequence_error(first, second, composite)
    for f in polynomials:
        inner = apply_sequence(second, f)
        for z in _points(z_points):
            _, scale = oracle(composite, f, z)
            together = apply_by('laurent', composite, f, z, nodes)
            sequential = apply_by('laurent', first, inner, z, nodes)
            worst = max(worst, relative_error(together, sequential, scale=scale))
    return worst


def extraction_error(f: TaylorPoly, nodes=None) -> float:
    """Cauchy coefficients of a polynomial on the unit polycircle against its own coefficients."""
    dim = f.dim
    recovered = taylor_coefficients(f, Point((0.0,) * dim), (1.0,) * dim, f.box, nodes)
    return sequence_distance(recovered.coeffs, f.coeffs)


def convergence_errors(pole: complex, radius: float, node_counts: Sequence[int]) -> list[tuple[int, float]]:
    """|trapezoidal - exact| for (1/2πi)∮ dζ/(ζ - pole) on |ζ| = radius."""
    contour = PolyContour.from_circles([Circle(0.0, radius)])
    exact = 1.0 if abs(pole) < radius else 0.0
    result = []
    for n in node_counts:
        value = contour_integral(lambda p: 1.0 / (p[..., 0] - pole), contour, int(n))
        result.append((int(n), abs(value - exact)))
    return result


def convergence_rate(errors: Sequence[tuple[int, float]]) -> float:
    """Worst error ratio between consecutive node counts while above the round-off floor."""
    worst = 0.0
    for (_, before), (_, after) in zip(errors, errors[1:]):
        if before <= CONVERGENCE_FLOOR:
            break
        if after > CONVERGENCE_FLOOR:
            worst = max(worst, after / before)
    return worst
