from __future__ import annotations

import numpy as np
import pytest
from numpy.polynomial import Polynomial

from multiplier_core.duality import (
    AnalyticFunctional,
    RationalFactor,
    SeparableGerm,
    TruncatedGerm,
    carrier_bound_check,
    cauchy_transform,
    cauchy_transform_germ,
    check_vanishing_at_infinity,
    hadamard_germ,
    moments,
    random_rational_germ,
)
from multiplier_core.domains import Circle, CompactBox, PolyContour
from multiplier_core.exceptions import RegionError, UnsupportedGeometryError
from multiplier_core.series import TruncationBox, monomial_tensor


def test_simple_pole_laurent_coefficients() -> None:
    factor = RationalFactor.simple_pole(0.5)
    np.testing.assert_allclose(factor.laurent_coefficients(5), [0.5 ** k for k in range(6)])
    np.testing.assert_allclose(factor.poles(), [0.5])


def test_pairing_is_an_involution() -> None:
    factor = RationalFactor.from_coefficients([1.0, 2.0], [0.3, -1.0, 1.0])
    twice = factor.paired().paired()
    w = np.array([1.5 + 0.5j, -2.0, 3j])
    np.testing.assert_allclose(twice(w), factor(w), rtol=1e-13)
    np.testing.assert_allclose(factor.paired()(1.0 / w), factor(w) * w, rtol=1e-13)


def test_paired_simple_pole_is_a_geometric_series() -> None:
    paired = RationalFactor.simple_pole(0.4j).paired()
    assert paired.holomorphic_at_origin()
    np.testing.assert_allclose(paired.series_coefficients(4), [(0.4j) ** k for k in range(5)], atol=1e-15)


def test_factor_from_polynomials() -> None:
    factor = RationalFactor(Polynomial([2.0]), Polynomial([-0.4, 1.0]))
    np.testing.assert_allclose(factor.poles(), [0.4])
    np.testing.assert_allclose(factor.laurent_coefficients(3), [2.0 * 0.4 ** k for k in range(4)])
    germ = SeparableGerm.product_poles((0.4,))
    np.testing.assert_allclose(germ.laurent_sequence(TruncationBox((3,))), [0.4 ** k for k in range(4)])


def test_non_vanishing_factor_has_no_laurent_germ() -> None:
    with pytest.raises(UnsupportedGeometryError):
        RationalFactor.constant(2.0).laurent_coefficients(3)


def test_partial_fractions_round_trip() -> None:
    factor = RationalFactor.from_partial_fractions([1.0, -2.0], [0.5, -0.25j])
    residues, poles = factor.partial_fractions()
    order = np.argsort(np.abs(poles))
    np.testing.assert_allclose(poles[order], [-0.25j, 0.5], atol=1e-14)
    np.testing.assert_allclose(residues[order], [-2.0, 1.0], atol=1e-13)


def test_product_pole_germ_sequences() -> None:
    c = (0.4 + 0.1j, -0.3j)
    germ = SeparableGerm.product_poles(c)
    box = TruncationBox((4, 3))
    expected = monomial_tensor(c, box)
    np.testing.assert_allclose(germ.laurent_sequence(box), expected, atol=1e-15)
    np.testing.assert_allclose(germ.paired().taylor_sequence(box), expected, atol=1e-15)
    assert germ.paired().side == 'taylor'
    assert [d.center for (d,) in germ.supports] == pytest.approx(list(c))


def test_laurent_germs_vanish_at_infinity() -> None:
    assert check_vanishing_at_infinity(SeparableGerm.product_poles((0.5, 0.2))) == (True, True)


def test_exact_hadamard_of_separable_germs() -> None:
    a, b = (0.5, 0.2j), (-0.4, 0.6)
    product = hadamard_germ(SeparableGerm.product_poles(a), SeparableGerm.product_poles(b))
    box = TruncationBox((3, 3))
    expected = monomial_tensor(a, box) * monomial_tensor(b, box)
    np.testing.assert_allclose(product.laurent_sequence(box), expected, atol=1e-14)


def test_truncated_germ_sequence_window() -> None:
    sequence = np.arange(6, dtype=complex).reshape(2, 3)
    germ = TruncatedGerm(sequence)
    window = germ.laurent_sequence(TruncationBox((2, 1)))
    np.testing.assert_allclose(window, [[0, 1], [3, 4], [0, 0]])
    assert germ.paired().side == 'taylor'


def test_point_evaluation_moments_and_action(bidisc) -> None:
    a = (0.5, 0.3j)
    delta = AnalyticFunctional.point_evaluation(a, bidisc)
    box = TruncationBox((5, 5))
    np.testing.assert_allclose(moments(delta, box), monomial_tensor(a, box), atol=1e-14)
    h = lambda p: np.exp(p[..., 0]) * (1.0 + p[..., 1] ** 2)
    assert delta.act(h) == pytest.approx(np.exp(0.5) * (1.0 - 0.09), rel=1e-13)


def test_cauchy_transform_of_point_evaluation(bidisc) -> None:
    a = np.array([0.5, 0.3j])
    delta = AnalyticFunctional.point_evaluation(a, bidisc)
    zeta = np.array([[1.9, 1.9j], [-1.9, 1.5 - 1.0j]])
    values = cauchy_transform(delta, zeta)
    expected = 1.0 / np.prod(zeta - a, axis=-1)
    np.testing.assert_allclose(values, expected, rtol=1e-13)
    with pytest.raises(RegionError):
        cauchy_transform(delta, np.array([0.5, 1.9]))


def test_duality_preserves_moments(bidisc) -> None:
    delta = AnalyticFunctional.point_evaluation((-0.4, 0.25 + 0.25j), bidisc)
    transformed = AnalyticFunctional.from_germ(cauchy_transform_germ(delta), bidisc, delta.nodes)
    box = TruncationBox((6, 6))
    np.testing.assert_allclose(moments(transformed, box), moments(delta, box), atol=1e-9)


def test_germ_functional_moments_are_laurent_coefficients(rng, bidisc) -> None:
    germ = random_rational_germ(rng, 2, max_terms=2, max_poles=2, pole_radius=0.5)
    functional = AnalyticFunctional.from_germ(germ, bidisc, 64)
    box = TruncationBox((5, 5))
    exact = germ.laurent_sequence(box)
    np.testing.assert_allclose(moments(functional, box), exact, atol=1e-10 * np.max(np.abs(exact)))


def test_random_germs_are_reproducible() -> None:
    first = random_rational_germ(np.random.default_rng(7), 2)
    second = random_rational_germ(np.random.default_rng(7), 2)
    box = TruncationBox((3, 3))
    np.testing.assert_array_equal(first.laurent_sequence(box), second.laurent_sequence(box))


def test_relocated_contour_keeps_the_moments(bidisc) -> None:
    a = (0.5, 0.3j)
    delta = AnalyticFunctional.point_evaluation(a, bidisc)
    moved = delta.with_contour(PolyContour.from_circles([Circle(0.0, 1.5), Circle(0.0, 1.5)]))
    box = TruncationBox((4, 4))
    np.testing.assert_allclose(moments(moved, box), monomial_tensor(a, box), atol=1e-12)


def test_point_evaluation_is_carried_by_its_point(bidisc) -> None:
    a = (0.5, 0.3j)
    delta = AnalyticFunctional.point_evaluation(a, bidisc)
    samples = [
        lambda p: np.exp(p[..., 0] + p[..., 1]),
        lambda p: p[..., 0] ** 2 * p[..., 1],
    ]
    report = carrier_bound_check(delta, CompactBox.point(a), samples, bound=1.5)
    assert report.samples == 2
    assert report.constant == pytest.approx(1.0, rel=1e-10)
    assert report.violations == []
    assert report.act_bound >= report.constant * (1.0 - 1e-9)
    assert carrier_bound_check(delta, CompactBox.point(a), samples, bound=0.5).violations == [0, 1]
