from __future__ import annotations

import numpy as np
import pytest

from multiplier_core.exceptions import BoxError, DimensionMismatchError, HyperplaneError, NonFiniteCoefficientError
from multiplier_core.series import (
    Point,
    TaylorPoly,
    TruncationBox,
    abs_index,
    dilate,
    hadamard,
    index_factorial,
    monomial_tensor,
    scaled_derivative,
)


def test_box_enumerates_indices_lexicographically() -> None:
    box = TruncationBox((1, 2))
    assert list(box.indices()) == [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)]
    assert box.shape == (2, 3)
    assert box.size == 6
    assert box.diameter == 3
    assert box.contains((1, 2))
    assert not box.contains((2, 0))
    assert not box.contains((0,))


def test_box_rejects_negative_or_empty_bounds() -> None:
    with pytest.raises(BoxError):
        TruncationBox((2, -1))
    with pytest.raises(BoxError):
        TruncationBox(())


def test_box_intersection_and_degree_mask() -> None:
    assert TruncationBox((2, 1)).intersect(TruncationBox((1, 3))) == TruncationBox((1, 1))
    mask = TruncationBox((2, 2)).total_degree_mask(1)
    assert mask.sum() == 3
    assert mask[0, 1] and mask[1, 0] and not mask[1, 1]
    with pytest.raises(DimensionMismatchError):
        TruncationBox((1,)).intersect(TruncationBox((1, 1)))


def test_index_helpers() -> None:
    assert abs_index((2, 3)) == 5
    assert index_factorial((2, 3)) == 12


def test_point_algebra_and_hyperplane() -> None:
    z = Point((2.0, 1j))
    assert not z.on_hyperplane()
    assert z.inverse().coords == (0.5, -1j)
    assert (z * Point((0.5, 1j))).coords == (1.0, -1.0)
    assert z.power((2, 2)) == pytest.approx(-4.0)
    w = Point((0.0, 1.0))
    assert w.on_hyperplane()
    with pytest.raises(HyperplaneError):
        w.inverse()
    with pytest.raises(NonFiniteCoefficientError):
        Point((np.inf, 0.0))


def test_evaluation_by_nested_horner() -> None:
    box = TruncationBox((1, 2))
    f = TaylorPoly.from_terms(box, {(0, 0): 1.0, (1, 0): 2.0, (1, 2): 3.0})
    assert f.evaluate(Point((0.5, 2.0))) == pytest.approx(8.0)
    batch = f.evaluate(np.array([[0.5, 2.0], [0.0, 0.0]]))
    np.testing.assert_allclose(batch, [8.0, 1.0])
    assert f.absolute_scale(Point((-0.5, 2.0))) == pytest.approx(8.0)


def test_monomial_tensor_holds_powers(rng) -> None:
    box = TruncationBox((3, 2))
    z = Point((0.3 + 0.2j, -0.7j))
    powers = monomial_tensor(z, box)
    for alpha in box.indices():
        assert powers[alpha] == pytest.approx(z.power(alpha), rel=1e-14)


def test_dilation_matches_scaled_argument(rng) -> None:
    box = TruncationBox((4, 3))
    f = TaylorPoly.random(rng, box)
    z = Point((0.5 + 0.5j, -1.2))
    w = Point((0.8, 0.3 - 0.6j))
    assert dilate(f, z).evaluate(w) == pytest.approx(f.evaluate(z * w), rel=1e-12)


def test_hadamard_lives_on_common_box(rng) -> None:
    f = TaylorPoly.random(rng, TruncationBox((2, 1)))
    g = TaylorPoly.random(rng, TruncationBox((1, 3)))
    product = hadamard(f, g)
    assert product.box == TruncationBox((1, 1))
    assert product.coefficient((1, 1)) == pytest.approx(f.coefficient((1, 1)) * g.coefficient((1, 1)))


def test_unit_of_hadamard_product(rng) -> None:
    f = TaylorPoly.random(rng, TruncationBox((3, 3)))
    assert hadamard(TaylorPoly.ones(f.box), f).allclose(f)


def test_coefficient_read_off() -> None:
    box = TruncationBox((3,))
    f = TaylorPoly.monomial((2,), box, value=5.0)
    assert scaled_derivative(f, (2,)) == 5.0
    assert scaled_derivative(f, (1,)) == 0.0
    with pytest.raises(BoxError):
        f.coefficient((4,))


def test_linear_structure_pads_boxes() -> None:
    f = TaylorPoly.from_terms(TruncationBox((1,)), {(1,): 1.0})
    g = TaylorPoly.from_terms(TruncationBox((3,)), {(3,): 2.0})
    total = f + g * 2.0
    assert total.box == TruncationBox((3,))
    np.testing.assert_allclose(total.coeffs, [0.0, 1.0, 0.0, 4.0])
    assert (total - total).allclose(TaylorPoly.zeros(total.box))


def test_non_finite_coefficients_are_rejected() -> None:
    with pytest.raises(NonFiniteCoefficientError):
        TaylorPoly(np.array([1.0, np.nan]))


def test_literal_omits_zero_coefficients() -> None:
    f = TaylorPoly.from_terms(TruncationBox((2, 2)), {(1, 2): 1.5 - 0.5j})
    assert f.to_literal() == {
        'dim': 2,
        'box': [2, 2],
        'coeffs': [{'alpha': [1, 2], 're': 1.5, 'im': -0.5}],
    }
