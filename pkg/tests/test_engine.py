from __future__ import annotations

import numpy as np
import pytest

from multiplier_core.domains import Annulus, ProductDomain
from multiplier_core.duality import AnalyticFunctional
from multiplier_core.engine import (
    Multiplier,
    ProvenanceKind,
    apply_laurent,
    apply_sequence,
    apply_taylor,
    compose,
    eigencheck,
    evaluate_at,
    functional_from_multiplier,
    laurent_germ,
    multiplier_from_functional,
    sequence_distance,
    taylor_germ,
)
from multiplier_core.exceptions import (
    CarrierMembershipError,
    DomainMembershipError,
    DomainMismatchError,
    HyperplaneError,
    NonRungeDomainError,
)
from multiplier_core.series import Point, TaylorPoly, TruncationBox, monomial_tensor

C = (0.4 + 0.1j, -0.3j)
Z = (0.7, -0.5 + 0.2j)
BOX = TruncationBox((8, 8))


@pytest.fixture
def dilation(bidisc) -> Multiplier:
    return Multiplier.dilation(bidisc, C, BOX)


def test_dilation_sequence_is_powers_of_c(dilation) -> None:
    np.testing.assert_allclose(dilation.sequence, monomial_tensor(C, BOX), atol=1e-15)
    assert dilation.kind is ProvenanceKind.LAURENT_GERM
    assert dilation.box == BOX


def test_contour_formulas_match_the_coefficientwise_product(dilation, bidisc, rng) -> None:
    f = TaylorPoly.random(rng, BOX)
    exact = apply_sequence(dilation, f).evaluate(Point(Z))
    scale = f.absolute_scale(Z)
    laurent = apply_laurent(dilation.laurent_kernel(), f, Z, bidisc)
    taylor = apply_taylor(dilation.laurent_kernel().paired(), f, Z, bidisc)
    assert abs(laurent - exact) <= 1e-9 * scale
    assert abs(taylor - exact) <= 1e-9 * scale
    assert abs(exact - f.evaluate(Point(C) * Point(Z))) <= 1e-12 * scale


def test_contour_formula_rejects_hyperplane_and_outside_points(dilation, bidisc, rng) -> None:
    f = TaylorPoly.random(rng, BOX)
    with pytest.raises(HyperplaneError):
        apply_laurent(dilation.laurent_kernel(), f, (0.0, 0.5), bidisc)
    with pytest.raises(DomainMembershipError):
        evaluate_at(dilation, f, (2.5, 0.5))


def test_evaluation_on_a_coordinate_hyperplane(dilation, rng) -> None:
    f = TaylorPoly.random(rng, BOX)
    z = (0.0, 0.5)
    exact = apply_sequence(dilation, f).evaluate(Point(z))
    assert abs(evaluate_at(dilation, f, z) - exact) <= 1e-9 * f.absolute_scale((1.0, 0.5))


def test_dilation_is_an_eigenoperator(dilation) -> None:
    report = eigencheck(dilation, [Z, (0.0, 0.5)], max_order=4)
    assert report.max_error < 1e-9
    assert len(report.errors) == 2
    assert report.checked == 2 * int(BOX.total_degree_mask(4).sum())


def test_identity_multiplier_reproduces_f(bidisc, rng) -> None:
    box = TruncationBox((6, 6))
    identity = Multiplier.identity(bidisc, box)
    np.testing.assert_array_equal(identity.sequence, np.ones(box.shape))
    f = TaylorPoly.random(rng, box)
    value = evaluate_at(identity, f, Z, nodes=128)
    assert abs(value - f.evaluate(Point(Z))) <= 1e-10 * f.absolute_scale(Z)


def test_kernel_outside_the_carrier_is_rejected(bidisc) -> None:
    with pytest.raises(CarrierMembershipError):
        Multiplier.dilation(bidisc, (1.5, 0.2), TruncationBox((3, 3)))


def test_annulus_domains_carry_no_multipliers() -> None:
    domain = ProductDomain((Annulus(1.0, 3.0),))
    with pytest.raises(NonRungeDomainError):
        Multiplier.from_sequence(domain, np.ones(3))


def test_zero_multiplier_is_exact(bidisc) -> None:
    zero = Multiplier.zero(bidisc, TruncationBox((4, 4)))
    assert not np.any(zero.sequence)
    report = eigencheck(zero, [(0.7, 0.3), (0.0, -0.5j)])
    assert report.max_error == 0.0


def test_composition_of_dilations(bidisc, rng) -> None:
    a, b = (0.5, 0.2j), (-0.4 + 0.2j, 0.6)
    composite = compose(
        Multiplier.dilation(bidisc, a, TruncationBox((6, 6))),
        Multiplier.dilation(bidisc, b, TruncationBox((5, 7))),
    )
    product = Point(a) * Point(b)
    assert composite.box == TruncationBox((5, 6))
    np.testing.assert_allclose(composite.sequence, monomial_tensor(product, composite.box), atol=1e-14)
    assert composite.kind is ProvenanceKind.LAURENT_GERM
    f = TaylorPoly.random(rng, composite.box)
    exact = f.evaluate(product * Point(Z))
    assert abs(evaluate_at(composite, f, Z) - exact) <= 1e-9 * f.absolute_scale(Z)


def test_composition_needs_a_common_domain(bidisc) -> None:
    box = TruncationBox((2, 2))
    with pytest.raises(DomainMismatchError):
        compose(Multiplier.dilation(bidisc, C, box), Multiplier.dilation(ProductDomain.polydisc(2, 3.0), C, box))


def test_sequence_composition_drops_the_kernel(bidisc) -> None:
    box = TruncationBox((2, 2))
    bare = Multiplier.from_sequence(bidisc, np.full(box.shape, 2.0))
    composite = compose(bare, Multiplier.dilation(bidisc, C, box))
    assert composite.kind is ProvenanceKind.SEQUENCE
    np.testing.assert_allclose(composite.sequence, 2.0 * monomial_tensor(C, box))


def test_functional_round_trip(dilation, bidisc) -> None:
    functional = functional_from_multiplier(dilation)
    recovered = multiplier_from_functional(functional, bidisc, BOX)
    assert recovered.kind is ProvenanceKind.FUNCTIONAL
    assert sequence_distance(recovered.sequence, dilation.sequence) < 1e-10
    assert recovered.sequence_close(dilation, rtol=1e-10)


def test_point_evaluation_gives_the_dilation(bidisc) -> None:
    a = (0.5, 0.3j)
    box = TruncationBox((5, 5))
    multiplier = multiplier_from_functional(AnalyticFunctional.point_evaluation(a, bidisc), bidisc, box)
    np.testing.assert_allclose(multiplier.sequence, monomial_tensor(a, box), atol=1e-13)


def test_truncated_germs_carry_the_sequence(dilation) -> None:
    np.testing.assert_allclose(laurent_germ(dilation).laurent_sequence(BOX), dilation.sequence)
    np.testing.assert_allclose(taylor_germ(dilation).taylor_sequence(BOX), dilation.sequence)
    assert taylor_germ(dilation).side == 'taylor'


def test_sequence_distance_on_the_common_window() -> None:
    first = np.array([[1.0, 0.5], [0.25, 0.0]])
    second = np.array([[1.0, 0.5, 9.0]])
    assert sequence_distance(first, second) == 0.0
    assert sequence_distance(first, first * 0.0) == pytest.approx(1.0)
    assert sequence_distance(np.zeros((0,)), np.zeros((2,))) == 0.0
