from __future__ import annotations

import numpy as np
import pytest

from multiplier_core.domains import (
    Annulus,
    Circle,
    ClosedDisc,
    CompactBox,
    Disc,
    PolyContour,
    ProductDomain,
    separating_contour,
    separating_polycontour,
    snug_contour,
)
from multiplier_core.exceptions import ContourPlacementError, HyperplaneError, UnsupportedGeometryError


def test_membership_of_points_and_batches(bidisc) -> None:
    assert bidisc.contains((1.0, -1.5j))
    assert not bidisc.contains((2.0, 0.0))
    inside = bidisc.contains(np.array([[0.0, 0.0], [1.9, 1.9], [0.0, 2.5]]))
    assert inside.tolist() == [True, True, False]


def test_annulus_membership() -> None:
    domain = ProductDomain((Annulus(1.0, 3.0), Disc(0.0, 1.0)))
    assert domain.contains((2.0, 0.5))
    assert not domain.contains((0.5, 0.5))
    assert not domain.is_runge()


def test_inverse_scale_of_polydisc(bidisc) -> None:
    scaled = bidisc.inverse_scale((0.5, 1j))
    assert [f.radius for f in scaled.factors] == pytest.approx([4.0, 2.0])
    with pytest.raises(HyperplaneError):
        bidisc.inverse_scale((0.0, 1.0))


def test_inverse_scale_moves_disc_centers() -> None:
    scaled = ProductDomain((Disc(1.0, 0.5),)).inverse_scale((2.0,))
    assert scaled.factors[0].center == pytest.approx(0.5)
    assert scaled.factors[0].radius == pytest.approx(0.25)


def test_dilation_sets() -> None:
    polydisc = ProductDomain.polydisc(2, 2.0).dilation_set()
    assert polydisc.contains((1.0, 1.0))
    assert polydisc.contains((0.0, -1.0))
    assert not polydisc.contains((1.1, 0.0))
    mixed = ProductDomain((Annulus(1.0, 2.0), Disc(0.0, 1.0))).dilation_set()
    assert mixed.contains((1j, 0.5))
    assert not mixed.contains((0.5, 0.5))
    assert mixed.describe() == ['|z| = 1', '|z| <= 1']
    with pytest.raises(UnsupportedGeometryError):
        ProductDomain((Disc(0.5, 1.0),)).dilation_set()


def test_distinguished_boundary_of_annulus_has_two_circles() -> None:
    contour = ProductDomain((Annulus(1.0, 3.0), Disc(0.0, 2.0))).distinguished_boundary()
    assert contour.radii() == ((3.0, 1.0), (2.0,))


def test_separating_circle_is_the_geometric_mean() -> None:
    (circle,) = separating_contour(ClosedDisc(0.5, 0.0), Disc(0.0, 2.0))
    assert circle.radius == pytest.approx(1.0)
    assert circle.orientation == 1
    with pytest.raises(ContourPlacementError):
        separating_contour(ClosedDisc(1.5, 0.6), Disc(0.0, 2.0))


def test_separating_circles_in_an_annulus() -> None:
    outer, inner = separating_contour(ClosedDisc(1.5, 0.0), Annulus(1.0, 2.0))
    assert outer.radius == pytest.approx(np.sqrt(3.0))
    assert inner.radius == pytest.approx(np.sqrt(1.5))
    assert (outer.orientation, inner.orientation) == (1, -1)


def test_separating_polycontour_winds_once_around_inner_points(bidisc) -> None:
    contour = separating_polycontour([ClosedDisc(0.3, 0.0), ClosedDisc(-0.4j, 0.0)], bidisc)
    assert contour.winding_number((0.3, -0.4j)) == 1
    assert contour.winding_number((1.9, -0.4j)) == 0


def test_snug_contour_for_a_center_singularity() -> None:
    (circle,) = snug_contour([ClosedDisc(0.0, 0.0)], Disc(0.0, 2.0), ratio=np.inf)
    assert circle.radius == pytest.approx(1.0)
    (pulled,) = snug_contour([ClosedDisc(0.4, 0.0)], Disc(0.0, 2.0), ratio=1.5)
    assert pulled.radius == pytest.approx(0.6)


def test_circle_inversion() -> None:
    flipped = Circle(0.0, 2.0).inverted()
    assert flipped.radius == pytest.approx(0.5)
    assert flipped.orientation == -1
    shifted = Circle(3.0, 1.0).inverted()
    assert shifted.orientation == 1
    assert shifted.center == pytest.approx(3.0 / 8.0)
    assert shifted.radius == pytest.approx(1.0 / 8.0)
    around_origin = Circle(0.5, 1.0).inverted()
    assert around_origin.orientation == -1
    with pytest.raises(ContourPlacementError):
        Circle(1.0, 1.0).inverted()


def test_polycontour_needs_circles() -> None:
    with pytest.raises(ContourPlacementError):
        PolyContour(((Circle(0.0, 1.0),), ()))


def test_grids_skip_coordinate_hyperplanes(bidisc) -> None:
    compact = CompactBox.closed_polydisc(2, 1.0)
    assert compact.grid(1, 4).shape == (25, 2)
    points = compact.grid(1, 4, exclude_hyperplanes=True)
    assert points.shape == (16, 2)
    assert np.all(points != 0)
    domain_points = bidisc.grid(2, 3)
    assert domain_points.shape == (36, 2)
    assert np.all(bidisc.contains(domain_points))


def test_compact_inclusion(bidisc) -> None:
    assert CompactBox.closed_polydisc(2, 1.0).is_inside(bidisc)
    assert not CompactBox.closed_polydisc(2, 2.0).is_inside(bidisc)
    assert CompactBox.point((1.0, 1.0)).contains_unit()
