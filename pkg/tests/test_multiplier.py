from __future__ import annotations

import numpy as np
import pytest

from multiplier_core.domains import ProductDomain
from multiplier_core.duality import RationalFactor, SeparableGerm, random_rational_germ
from multiplier_core.engine import (
    Multiplier,
    ProvenanceKind,
    apply_laurent,
    apply_sequence,
    apply_taylor,
    eigencheck,
    placed_contour,
)
from multiplier_core.exceptions import ContourPlacementError
from multiplier_core.series import Point, TaylorPoly, TruncationBox
from multiplier_core.settings import quadrature_setting
from multiplier_core.tolerances import relative_error

TOLERANCE = 1e-9


def sample_points(rng: np.random.Generator, domain: ProductDomain, count: int) -> list[Point]:
    grid = domain.grid(5, 8)
    rows = rng.choice(grid.shape[0], size=count, replace=False)
    return [Point(tuple(complex(c) for c in grid[i])) for i in rows]


def near_boundary_points() -> list[Point]:
    """25 points of the unit bidisc with |z₂| = 0.9 and |z₁| up to 0.95."""
    points = []
    for modulus in np.linspace(0.3, 0.95, 5):
        for angle in np.linspace(0.1, 2 * np.pi - 0.3, 5):
            points.append(Point((modulus * np.exp(1j * angle), 0.9 * np.exp(-1j * (angle + 0.4)))))
    return points


@pytest.mark.parametrize('radius', [1.0, 2.0])
def test_random_germ_multipliers_have_monomial_eigenvectors(rng, radius) -> None:
    domain = ProductDomain.polydisc(2, radius)
    box = TruncationBox((24, 24))
    worst = 0.0
    for _ in range(20):
        multiplier = Multiplier.from_laurent_germ(random_rational_germ(rng, 2), domain, box)
        report = eigencheck(multiplier, sample_points(rng, domain, 25), max_order=24)
        worst = max(worst, report.max_error)
    assert worst <= TOLERANCE


@pytest.mark.parametrize('modulus', [0.3, 0.7, 0.95])
def test_three_application_paths_agree_near_the_boundary(rng, modulus) -> None:
    domain = ProductDomain.polydisc(2, 1.0)
    c = (modulus * np.exp(0.7j), modulus * np.exp(-2.1j))
    multiplier = Multiplier.dilation(domain, c, TruncationBox((6, 6)))
    kernel = multiplier.laurent_kernel()
    paired = kernel.paired()
    worst = 0.0
    for _ in range(10):
        f = TaylorPoly.random(rng, TruncationBox((6, 6)))
        for z in near_boundary_points():
            product = apply_sequence(multiplier, f)
            expected, scale = product.evaluate(z), product.absolute_scale(z)
            laurent = apply_laurent(kernel, f, z, domain)
            taylor = apply_taylor(paired, f, z, domain)
            worst = max(worst, relative_error(laurent, expected, scale=scale),
                        relative_error(taylor, expected, scale=scale),
                        relative_error(laurent, taylor, scale=scale))
    assert worst <= TOLERANCE


def test_close_supports_get_more_nodes() -> None:
    domain = ProductDomain.polydisc(2, 1.0)
    kernel = SeparableGerm.product_poles((0.95, 0.95))
    box = TruncationBox((6, 6))
    _, interior = placed_contour(kernel, domain, Point((0.3, 0.3)), box, entire=True)
    _, boundary = placed_contour(kernel, domain, Point((0.9, 0.95)), box, entire=True)
    assert interior == (64, 64)
    assert boundary[0] > interior[0]


def test_unresolvable_placement_raises(rng) -> None:
    domain = ProductDomain.polydisc(2, 1.0)
    kernel = SeparableGerm.product_poles((0.95, 0.95))
    f = TaylorPoly.random(rng, TruncationBox((6, 6)))
    z = (0.9, 0.9j)
    with pytest.raises(ContourPlacementError):
        apply_laurent(kernel, f, z, domain, nodes=64)
    quadrature_setting.max_nodes = 128
    with pytest.raises(ContourPlacementError):
        apply_taylor(kernel.paired(), f, z, domain)


def test_taylor_germ_multiplier(rng) -> None:
    domain = ProductDomain.polydisc(2, 2.0)
    box = TruncationBox((12, 12))
    laurent = random_rational_germ(rng, 2)
    multiplier = Multiplier.from_taylor_germ(laurent.paired(), domain, box)
    assert multiplier.kind is ProvenanceKind.TAYLOR_GERM
    np.testing.assert_allclose(multiplier.sequence, laurent.laurent_sequence(box),
                               atol=1e-12 * np.max(np.abs(multiplier.sequence)))
    assert eigencheck(multiplier, sample_points(rng, domain, 10), max_order=12).max_error <= TOLERANCE


def test_double_pole_at_the_origin() -> None:
    domain = ProductDomain.polydisc(1, 1.0)
    box = TruncationBox((16,))
    germ = SeparableGerm(((1.0, (RationalFactor.from_poles([0.0, 0.0, 0.3]),)),), 1)
    multiplier = Multiplier.from_laurent_germ(germ, domain, box)
    alpha = np.arange(17)
    expected = np.where(alpha >= 2, 0.3 ** (alpha - 2.0), 0.0)
    np.testing.assert_allclose(multiplier.sequence, expected, atol=1e-13)
    samples = [Point((r * np.exp(1j * t),)) for r in (0.2, 0.6, 0.95) for t in (0.3, 2.0, 4.1)]
    assert eigencheck(multiplier, samples).max_error <= TOLERANCE
