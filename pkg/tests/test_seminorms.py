from __future__ import annotations

import numpy as np
import pytest

from multiplier_core.domains import CompactBox, Disc, ProductDomain
from multiplier_core.duality import AnalyticFunctional, SeparableGerm
from multiplier_core.engine import Multiplier
from multiplier_core.exceptions import BoxError, DimensionMismatchError
from multiplier_core.seminorms import (
    DeltaSequence,
    boundedness_probe,
    functional_seminorm,
    germ_seminorm,
    uniform_germ_seminorm,
)
from multiplier_core.series import TruncationBox

BOX = TruncationBox((4,))
INVERSE = SeparableGerm.product_poles((0.0,))


def test_geometric_delta_sequence() -> None:
    delta = DeltaSequence.geometric(0.5, 3)
    assert delta.values == (1.0, 0.5, 0.25, 0.125)
    np.testing.assert_allclose(delta.cumulative, [1.0, 0.5, 0.125, 0.015625])
    assert delta.cumulative_at(2) == pytest.approx(0.125)
    np.testing.assert_allclose(delta.weights(TruncationBox((1, 1))), [[1.0, 0.5], [0.5, 0.125]])
    np.testing.assert_allclose(delta.weights(TruncationBox((1,)), shift=1), [0.5, 0.125])


def test_delta_sequence_validation() -> None:
    with pytest.raises(BoxError):
        DeltaSequence((1.0, 2.0))
    with pytest.raises(BoxError):
        DeltaSequence((1.0, 1.0))
    with pytest.raises(BoxError):
        DeltaSequence((1.0, 0.0))
    with pytest.raises(BoxError):
        DeltaSequence.geometric(1.0, 3)
    with pytest.raises(BoxError):
        DeltaSequence.geometric(0.5, 2).weights(TruncationBox((2, 1)))
    with pytest.raises(BoxError):
        DeltaSequence.geometric(0.5, 2).cumulative_at(3)


def test_delta_sequence_from_literal() -> None:
    sized = DeltaSequence.from_literal({'kind': 'geometric', 'ratio': 0.5}, TruncationBox((2,)))
    assert sized.length == 3
    assert DeltaSequence.from_literal([1.0, 0.5]).values == (1.0, 0.5)
    assert DeltaSequence.for_box(TruncationBox((2, 3))).length == 7
    with pytest.raises(BoxError):
        DeltaSequence.from_literal({'kind': 'geometric', 'ratio': 0.5})


def test_inverse_seminorm_ties_between_branches(disc) -> None:
    report = germ_seminorm(INVERSE, disc, DeltaSequence.geometric(0.5, 4), BOX)
    assert report.value == pytest.approx(0.5, rel=1e-10)
    assert report.truncation_box == BOX


def test_infinity_branch_dominates_for_slow_weights(disc) -> None:
    report = germ_seminorm(INVERSE, disc, DeltaSequence.geometric(0.9, 4), BOX)
    assert report.value == pytest.approx(0.9, rel=1e-10)
    assert report.branch == 'infinity'
    assert report.alpha == (1,)
    assert report.point is None


def test_boundary_branch_dominates_near_the_singularity() -> None:
    domain = ProductDomain((Disc(0.0, 0.5),))
    report = germ_seminorm(INVERSE, domain, DeltaSequence.geometric(0.25, 4), BOX)
    assert report.value == pytest.approx(2.0, rel=1e-10)
    assert report.branch == 'boundary'
    assert report.alpha == (0,)
    assert abs(report.point[0]) == pytest.approx(0.5)


def test_seminorm_dimensions_must_agree(disc) -> None:
    with pytest.raises(DimensionMismatchError):
        germ_seminorm(INVERSE, disc, DeltaSequence.geometric(0.5, 6), TruncationBox((2, 2)))


def test_uniform_seminorm_over_a_compact(disc) -> None:
    compact = CompactBox.closed_polydisc(1, 0.5)
    report = uniform_germ_seminorm(INVERSE, disc, compact, DeltaSequence.geometric(0.5, 4), BOX, radii=1, angles=4)
    assert report.value == pytest.approx(0.5, rel=1e-10)
    assert report.z_grid_size == 4
    assert abs(report.z[0]) == pytest.approx(0.5)


def test_functional_seminorm_of_a_point_evaluation(disc) -> None:
    delta_a = AnalyticFunctional.point_evaluation((0.25,), disc)
    compact = CompactBox.closed_polydisc(1, 0.5)
    report = functional_seminorm(delta_a, disc, compact, DeltaSequence.geometric(0.5, 4), BOX, radii=1, angles=4)
    assert report.value == pytest.approx(0.5, rel=1e-8)
    assert report.branch == 'infinity'
    assert report.alpha == (1,)


def test_monomial_probe_of_a_dilation(disc) -> None:
    multiplier = Multiplier.dilation(disc, (0.5,), BOX)
    compact = CompactBox.closed_polydisc(1, 0.5)
    report = boundedness_probe(multiplier, compact, 'S', DeltaSequence.geometric(0.5, 6), radii=1, angles=4)
    assert report.family == 'S'
    assert report.value == pytest.approx(0.5, rel=1e-10)
    assert report.alpha == (0,)
    assert report.evaluations == 4 * 5


def test_cauchy_probe_of_a_dilation(disc) -> None:
    multiplier = Multiplier.dilation(disc, (0.5,), BOX)
    compact = CompactBox.closed_polydisc(1, 0.5)
    report = boundedness_probe(multiplier, compact, 'B', DeltaSequence.geometric(0.5, 2), radii=1, angles=4,
                               max_order=0, boundary_points=4)
    assert report.family == 'B'
    assert report.evaluations == 16
    assert report.alpha == (0,)
    assert report.value == pytest.approx(1.0 / np.sqrt(4.0625 - np.cos(np.pi / 4)), rel=1e-10)


def test_unknown_probe_family(disc) -> None:
    multiplier = Multiplier.dilation(disc, (0.5,), BOX)
    with pytest.raises(BoxError):
        boundedness_probe(multiplier, CompactBox.closed_polydisc(1, 0.5), 'Q', DeltaSequence.geometric(0.5, 6))
