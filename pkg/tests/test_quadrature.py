from __future__ import annotations

import math

import numpy as np
import pytest

from multiplier_core.domains import Circle, PolyContour
from multiplier_core.exceptions import ContourPlacementError, NodeCountError
from multiplier_core.quadrature import (
    QuadratureGrid,
    balanced_ratio,
    contour_integral,
    default_nodes,
    laurent_moments,
    local_taylor_coefficients,
    resolve_nodes,
    sample,
    taylor_coefficients,
    trapezoid_error_estimate,
)
from multiplier_core.series import Point, TaylorPoly, TruncationBox

UNIT_CIRCLE = PolyContour.from_circles([Circle(0.0, 1.0)])


def test_default_node_count_follows_the_box() -> None:
    assert default_nodes() == 64
    assert default_nodes(TruncationBox((12, 12))) == 64
    assert default_nodes(TruncationBox((40, 3))) == 128
    assert resolve_nodes(16, 2) == (16, 16)
    assert resolve_nodes([8, 32], 2) == (8, 32)


def test_node_counts_are_validated() -> None:
    with pytest.raises(NodeCountError):
        resolve_nodes(3, 1)
    with pytest.raises(NodeCountError):
        resolve_nodes([8, 8, 8], 2)


def test_cauchy_kernel_integrates_to_one() -> None:
    value = contour_integral(lambda p: 1.0 / (p[..., 0] - 0.3), UNIT_CIRCLE, 64)
    assert abs(value - 1.0) < 1e-14


def test_holomorphic_integrands_integrate_to_zero() -> None:
    assert abs(contour_integral(lambda p: p[..., 0] ** 3, UNIT_CIRCLE, 16)) < 1e-15
    assert abs(contour_integral(lambda p: 1.0 / p[..., 0] ** 2, UNIT_CIRCLE, 16)) < 1e-15


def test_negative_orientation_flips_the_sign() -> None:
    clockwise = PolyContour.from_circles([Circle(0.0, 1.0, -1)])
    value = contour_integral(lambda p: 1.0 / p[..., 0], clockwise, 8)
    assert value == pytest.approx(-1.0)


def test_product_contour_integral() -> None:
    contour = PolyContour.from_circles([Circle(0.0, 1.0), Circle(0.0, 0.5)])
    value = contour_integral(lambda p: 1.0 / ((p[..., 0] - 0.2j) * (p[..., 1] + 0.1)), contour, 64)
    assert value == pytest.approx(1.0, abs=1e-13)


def test_geometric_convergence_in_the_node_count() -> None:
    errors = [abs(contour_integral(lambda p: 1.0 / (p[..., 0] - 0.5), UNIT_CIRCLE, n) - 1.0) for n in (8, 16)]
    assert errors[0] == pytest.approx(0.5 ** 8 / (1 - 0.5 ** 8), rel=1e-8)
    assert errors[1] < errors[0] * 0.5 ** 7


def test_singular_samples_are_placement_errors() -> None:
    with pytest.raises(ContourPlacementError):
        sample(lambda p: 1.0 / (p[..., 0] - 1.0), np.array([[1.0 + 0j]]))


def test_taylor_coefficients_recover_a_polynomial(rng) -> None:
    f = TaylorPoly.random(rng, TruncationBox((3, 2)))
    recovered = taylor_coefficients(f, Point((0.0, 0.0)), (1.0, 1.0), f.box, 16)
    np.testing.assert_allclose(recovered.coeffs, f.coeffs, atol=1e-13)


def test_taylor_coefficients_of_exp() -> None:
    box = TruncationBox((6,))
    recovered = taylor_coefficients(lambda p: np.exp(p[..., 0]), (0.0,), (1.0,), box, 32)
    expected = [1.0 / math.factorial(k) for k in range(7)]
    np.testing.assert_allclose(recovered.coeffs, expected, atol=1e-14)


def test_taylor_coefficients_around_a_shifted_center() -> None:
    box = TruncationBox((4,))
    recovered = taylor_coefficients(lambda p: 1.0 / p[..., 0], (2.0,), (0.5,), box, 32)
    expected = [(-1) ** k / 2.0 ** (k + 1) for k in range(5)]
    np.testing.assert_allclose(recovered.coeffs, expected, atol=1e-13)


def test_extraction_needs_enough_nodes() -> None:
    with pytest.raises(NodeCountError):
        taylor_coefficients(lambda p: p[..., 0], (0.0,), (1.0,), TruncationBox((5,)), 8)


def test_laurent_moments_of_a_simple_pole() -> None:
    box = TruncationBox((6,))
    moments = laurent_moments(lambda p: 1.0 / (p[..., 0] - 0.5), (1.0,), box, 64)
    np.testing.assert_allclose(moments, [0.5 ** k for k in range(7)], atol=1e-14)
    with pytest.raises(ContourPlacementError):
        laurent_moments(lambda p: 1.0 / (p[..., 0] - 0.5), (0.4,), box, 64, singular_radii=(0.5,))


def test_moment_tensor_matches_separate_integrals() -> None:
    grid = QuadratureGrid.build(PolyContour.from_circles([Circle(0.0, 1.0), Circle(0.0, 1.0)]), 64)
    kernel = lambda p: 1.0 / ((p[..., 0] - 0.25) * (p[..., 1] - 0.5j))
    moments = grid.sample(kernel).moments(TruncationBox((2, 2)))
    assert moments[2, 1] == pytest.approx(0.25 ** 2 * 0.5j, abs=1e-14)
    assert moments[0, 0] == pytest.approx(1.0, abs=1e-14)


def test_local_coefficients_at_many_centers() -> None:
    box = TruncationBox((3,))
    centers = np.array([[2.0], [-1.0j]])
    radii = np.array([[0.5], [0.25]])
    coefficients = local_taylor_coefficients(lambda p: 1.0 / p[..., 0], centers, radii, box, 32)
    assert coefficients.shape == (2, 4)
    for row, c in zip(coefficients, (2.0, -1.0j)):
        np.testing.assert_allclose(row, [(-1) ** k / c ** (k + 1) for k in range(4)], atol=1e-12)


def test_balanced_ratio_exceeds_one() -> None:
    ratio = balanced_ratio(64, 24)
    assert 1.0 < ratio < 2.0
    assert balanced_ratio(128, 24) < ratio


def test_trapezoid_error_estimate() -> None:
    assert trapezoid_error_estimate(UNIT_CIRCLE, (8,), (0.5,)) == pytest.approx(0.5 ** 8)
    assert trapezoid_error_estimate(UNIT_CIRCLE, (8,), (0.5,), (4.0,)) == pytest.approx(0.5 ** 8 + 0.25 ** 8)
    assert trapezoid_error_estimate(UNIT_CIRCLE, (8,), (1.0,)) == math.inf
    assert trapezoid_error_estimate(UNIT_CIRCLE, (8,), (0.5,), (1.0,)) == math.inf
    assert trapezoid_error_estimate(UNIT_CIRCLE, (64,), (0.5,), degrees=(24,)) > 2.0 ** 24 * np.finfo(float).eps
