"""
Planar factors and product domains

Discs with any center and origin-centered annuli, their products, closed compact
pieces, circles and polycontours. Covers membership, the coordinatewise scaling
z⁻¹Ω, dilation sets, distinguished boundaries, sampling grids and the placement
of separating contours.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np

from utils import logger

from .exceptions import (
    ContourPlacementError,
    DimensionMismatchError,
    HyperplaneError,
    UnsupportedGeometryError,
)
from .series import Point, as_point, as_points
from .settings import quadrature_setting


def _radial_fractions(count: int) -> np.ndarray:
    """1 - 2^-(i+1): samples accumulating at the boundary of an open factor."""
    return 1.0 - 2.0 ** -(np.arange(count) + 1.0)


def _angles(count: int) -> np.ndarray:
    return 2.0 * np.pi * (np.arange(count) + 0.5) / count


# closed pieces


@dataclass(frozen=True)
class ClosedDisc:
    """{|w - center| ≤ radius}; radius 0 is a single point."""
    center: complex
    radius: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, 'center', complex(self.center))
        object.__setattr__(self, 'radius', float(self.radius))
        if self.radius < 0:
            raise UnsupportedGeometryError(f"Closed disc radius must be non-negative, got {self.radius}")

    def contains(self, w):
        return np.abs(np.asarray(w) - self.center) <= self.radius

    def reach(self, origin: complex = 0.0) -> float:
        """Largest distance from `origin` to a point of the disc."""
        return abs(self.center - origin) + self.radius

    def scaled(self, factor: complex) -> "ClosedDisc":
        """factor · K"""
        return ClosedDisc(self.center * factor, self.radius * abs(factor))

    def is_inside(self, factor: "PlanarFactor") -> bool:
        """Compact inclusion into an open planar factor."""
        if isinstance(factor, Disc):
            return abs(self.center - factor.center) + self.radius < factor.radius
        gap = abs(self.center)
        return gap - self.radius > factor.r_in and gap + self.radius < factor.r_out

    def grid(self, radii: int, angles: int) -> np.ndarray:
        if self.radius == 0.0:
            return np.array([self.center])
        fractions = (np.arange(radii) + 1.0) / radii
        ring = self.center + self.radius * np.multiply.outer(fractions, np.exp(1j * _angles(angles)))
        return np.concatenate([[self.center], ring.ravel()])


@dataclass(frozen=True)
class ClosedAnnulus:
    """{r_in ≤ |w| ≤ r_out}; r_in = r_out is a circle."""
    r_in: float
    r_out: float

    def __post_init__(self):
        object.__setattr__(self, 'r_in', float(self.r_in))
        object.__setattr__(self, 'r_out', float(self.r_out))
        if not 0.0 <= self.r_in <= self.r_out:
            raise UnsupportedGeometryError(f"Closed annulus needs 0 <= r_in <= r_out, got ({self.r_in}, {self.r_out})")

    def contains(self, w, slack: float = 0.0):
        modulus = np.abs(np.asarray(w))
        return (modulus >= self.r_in - slack) & (modulus <= self.r_out + slack)


CompactFactor = Union[ClosedDisc, ClosedAnnulus]


# open planar factors


@dataclass(frozen=True)
class Disc:
    center: complex
    radius: float

    kind = 'disc'

    def __post_init__(self):
        object.__setattr__(self, 'center', complex(self.center))
        object.__setattr__(self, 'radius', float(self.radius))
        if not self.radius > 0:
            raise UnsupportedGeometryError(f"Disc radius must be positive, got {self.radius}")

    def contains(self, w):
        return np.abs(np.asarray(w) - self.center) < self.radius

    def closure_contains(self, w, slack: float = 1e-12):
        return np.abs(np.asarray(w) - self.center) <= self.radius * (1.0 + slack)

    def scale_by_inverse(self, zj: complex) -> "Disc":
        """(1/zj)·Disc(a, r) = Disc(a/zj, r/|zj|)"""
        return Disc(self.center / zj, self.radius / abs(zj))

    def boundary_distance(self, w) -> np.ndarray:
        return self.radius - np.abs(np.asarray(w) - self.center)

    def outer_radius(self) -> float:
        """max |w| over the closure"""
        return abs(self.center) + self.radius

    def dilation_set(self) -> CompactFactor:
        if self.center != 0:
            raise UnsupportedGeometryError(
                f"Dilation set of a disc centered at {self.center} is not a supported region"
            )
        return ClosedDisc(0.0, 1.0)

    def boundary(self) -> tuple["Circle", ...]:
        return (Circle(self.center, self.radius),)

    def grid(self, radii: int, angles: int) -> np.ndarray:
        ring = np.multiply.outer(self.radius * _radial_fractions(radii), np.exp(1j * _angles(angles)))
        return (self.center + ring).ravel()


@dataclass(frozen=True)
class Annulus:
    r_in: float
    r_out: float

    kind = 'annulus'

    def __post_init__(self):
        object.__setattr__(self, 'r_in', float(self.r_in))
        object.__setattr__(self, 'r_out', float(self.r_out))
        if not 0.0 < self.r_in < self.r_out:
            raise UnsupportedGeometryError(f"Annulus needs 0 < r_in < r_out, got ({self.r_in}, {self.r_out})")

    @property
    def center(self) -> complex:
        return 0j

    def contains(self, w):
        modulus = np.abs(np.asarray(w))
        return (modulus > self.r_in) & (modulus < self.r_out)

    def closure_contains(self, w, slack: float = 1e-12):
        modulus = np.abs(np.asarray(w))
        return (modulus >= self.r_in * (1.0 - slack)) & (modulus <= self.r_out * (1.0 + slack))

    def scale_by_inverse(self, zj: complex) -> "Annulus":
        return Annulus(self.r_in / abs(zj), self.r_out / abs(zj))

    def boundary_distance(self, w) -> np.ndarray:
        modulus = np.abs(np.asarray(w))
        return np.minimum(modulus - self.r_in, self.r_out - modulus)

    def outer_radius(self) -> float:
        return self.r_out

    def dilation_set(self) -> CompactFactor:
        return ClosedAnnulus(1.0, 1.0)

    def boundary(self) -> tuple["Circle", ...]:
        # point-set boundary; both circles carry +1
        return (Circle(0.0, self.r_out), Circle(0.0, self.r_in))

    def grid(self, radii: int, angles: int) -> np.ndarray:
        weights = (np.arange(radii) + 1.0) / (radii + 1.0)
        moduli = self.r_in ** (1.0 - weights) * self.r_out ** weights
        return np.multiply.outer(moduli, np.exp(1j * _angles(angles))).ravel()


PlanarFactor = Union[Disc, Annulus]


# contours


@dataclass(frozen=True)
class Circle:
    center: complex
    radius: float
    orientation: int = 1

    def __post_init__(self):
        object.__setattr__(self, 'center', complex(self.center))
        object.__setattr__(self, 'radius', float(self.radius))
        if not self.radius > 0:
            raise ContourPlacementError(f"Circle radius must be positive, got {self.radius}")
        if self.orientation not in (1, -1):
            raise ContourPlacementError(f"Orientation must be +1 or -1, got {self.orientation}")

    def nodes(self, count: int, phase: float = 0.0) -> np.ndarray:
        theta = 2.0 * np.pi * np.arange(count) / count + phase
        return self.center + self.radius * np.exp(1j * theta)

    def winding_number(self, p) -> np.ndarray:
        """orientation strictly inside, 0 on or outside the circle"""
        inside = np.abs(np.asarray(p) - self.center) < self.radius
        return np.where(inside, self.orientation, 0)

    @property
    def length(self) -> float:
        return 2.0 * np.pi * self.radius

    def inverted(self) -> "Circle":
        """Image under w ↦ 1/w with the induced orientation."""
        power = abs(self.center) ** 2 - self.radius ** 2
        if power == 0.0:
            raise ContourPlacementError(f"{self} passes through the origin")
        orientation = self.orientation if power > 0 else -self.orientation
        return Circle(self.center.conjugate() / power, self.radius / abs(power), orientation)


@dataclass(frozen=True)
class PolyContour:
    """γ₁ × … × γₙ with every γⱼ a finite union of circles."""
    factors: tuple[tuple[Circle, ...], ...]

    def __post_init__(self):
        factors = tuple(tuple(f) if isinstance(f, (list, tuple)) else (f,) for f in self.factors)
        if not factors or any(not f for f in factors):
            raise ContourPlacementError("Every factor of a polycontour needs at least one circle")
        object.__setattr__(self, 'factors', factors)

    @classmethod
    def from_circles(cls, circles: Iterable[Circle]) -> "PolyContour":
        return cls(tuple((c,) for c in circles))

    @property
    def dim(self) -> int:
        return len(self.factors)

    def factor_winding(self, j: int, w) -> np.ndarray:
        return sum(c.winding_number(w) for c in self.factors[j])

    def winding_number(self, z) -> int:
        z = as_point(z)
        if z.dim != self.dim:
            raise DimensionMismatchError(f"Point of dimension {z.dim} against contour of dimension {self.dim}")
        return int(np.prod([self.factor_winding(j, zj) for j, zj in enumerate(z.coords)]))

    def inverted(self) -> "PolyContour":
        return PolyContour(tuple(tuple(c.inverted() for c in factor) for factor in self.factors))

    def radii(self) -> tuple[tuple[float, ...], ...]:
        return tuple(tuple(c.radius for c in factor) for factor in self.factors)

    def lengths(self) -> tuple[float, ...]:
        return tuple(sum(c.length for c in factor) for factor in self.factors)

    def enclosed_discs(self) -> tuple[tuple[ClosedDisc, ...], ...]:
        """Closed discs bounded by the positively oriented circles of each factor."""
        return tuple(
            tuple(ClosedDisc(c.center, c.radius) for c in factor if c.orientation > 0)
            for factor in self.factors
        )

    def touches(self, j: int, w: complex, relative_gap: float = 1e-12) -> bool:
        return any(abs(abs(w - c.center) - c.radius) <= relative_gap * c.radius for c in self.factors[j])


# products


@dataclass(frozen=True)
class DilationSet:
    """V(Ω) as a product of closed planar pieces."""
    factors: tuple[CompactFactor, ...]

    def contains(self, z, slack: float = 1e-12) -> bool:
        z = as_point(z)
        result = True
        for piece, zj in zip(self.factors, z.coords):
            if isinstance(piece, ClosedDisc):
                result &= bool(abs(zj - piece.center) <= piece.radius + slack)
            else:
                result &= bool(piece.contains(zj, slack))
        return result

    def describe(self) -> list[str]:
        labels = []
        for piece in self.factors:
            if isinstance(piece, ClosedAnnulus) and piece.r_in == piece.r_out:
                labels.append(f"|z| = {piece.r_out:g}")
            elif isinstance(piece, ClosedAnnulus):
                labels.append(f"{piece.r_in:g} <= |z| <= {piece.r_out:g}")
            else:
                labels.append(f"|z| <= {piece.radius:g}")
        return labels


@dataclass(frozen=True)
class ProductDomain:
    """Ω = Ω₁ × … × Ωₙ"""
    factors: tuple[PlanarFactor, ...]

    def __post_init__(self):
        factors = tuple(self.factors)
        if not factors:
            raise DimensionMismatchError("A product domain needs at least one factor")
        for factor in factors:
            if not isinstance(factor, (Disc, Annulus)):
                raise UnsupportedGeometryError(f"Unsupported planar factor: {factor!r}")
        object.__setattr__(self, 'factors', factors)

    @classmethod
    def polydisc(cls, dim: int, radius: float, center: complex = 0.0) -> "ProductDomain":
        return cls(tuple(Disc(center, radius) for _ in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.factors)

    def is_runge(self) -> bool:
        return all(isinstance(f, Disc) for f in self.factors)

    def contains(self, z):
        """zⱼ ∈ Ωⱼ for all j; a batch of points gives a boolean array."""
        points = as_points(z, self.dim)
        inside = np.ones(points.shape[:-1], dtype=bool)
        for j, factor in enumerate(self.factors):
            inside &= factor.contains(points[..., j])
        return bool(inside) if inside.ndim == 0 else inside

    def closure_contains(self, z, slack: float = 1e-12):
        points = as_points(z, self.dim)
        inside = np.ones(points.shape[:-1], dtype=bool)
        for j, factor in enumerate(self.factors):
            inside &= factor.closure_contains(points[..., j], slack)
        return bool(inside) if inside.ndim == 0 else inside

    def inverse_scale(self, z) -> "ProductDomain":
        """z⁻¹Ω = {w : zw ∈ Ω}"""
        z = as_point(z)
        _check_dim(self.dim, z.dim)
        if z.on_hyperplane():
            raise HyperplaneError(f"z⁻¹Ω is undefined for z = {z.coords}")
        return ProductDomain(tuple(f.scale_by_inverse(zj) for f, zj in zip(self.factors, z.coords)))

    def dilation_set(self) -> DilationSet:
        return DilationSet(tuple(f.dilation_set() for f in self.factors))

    def distinguished_boundary(self) -> PolyContour:
        return PolyContour(tuple(f.boundary() for f in self.factors))

    def boundary_distance(self, z) -> np.ndarray:
        """Per-factor distance from zⱼ to ∂Ωⱼ."""
        z = as_point(z)
        return np.array([float(f.boundary_distance(zj)) for f, zj in zip(self.factors, z.coords)])

    def grid(self, radii: int, angles: int, exclude_hyperplanes: bool = True) -> np.ndarray:
        """Tensor sample grid of Ω, shape (m, n)."""
        per_factor = [f.grid(radii, angles) for f in self.factors]
        return _tensor_points(per_factor, exclude_hyperplanes)


@dataclass(frozen=True)
class CompactBox:
    """K = K₁ × … × Kₙ with closed-disc factors."""
    factors: tuple[ClosedDisc, ...]

    def __post_init__(self):
        factors = tuple(self.factors)
        if not factors:
            raise DimensionMismatchError("A compact box needs at least one factor")
        object.__setattr__(self, 'factors', factors)

    @classmethod
    def point(cls, z) -> "CompactBox":
        return cls(tuple(ClosedDisc(c, 0.0) for c in as_point(z).coords))

    @classmethod
    def closed_polydisc(cls, dim: int, radius: float, center: complex = 0.0) -> "CompactBox":
        return cls(tuple(ClosedDisc(center, radius) for _ in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.factors)

    def contains(self, z) -> bool:
        z = as_point(z)
        return all(bool(k.contains(zj)) for k, zj in zip(self.factors, z.coords))

    def is_inside(self, domain: ProductDomain) -> bool:
        _check_dim(self.dim, domain.dim)
        return all(k.is_inside(f) for k, f in zip(self.factors, domain.factors))

    def contains_unit(self) -> bool:
        return self.contains(Point.ones(self.dim))

    def distinguished_boundary(self) -> PolyContour:
        circles = []
        for k in self.factors:
            if k.radius == 0.0:
                raise UnsupportedGeometryError(f"Point factor {k.center} has no boundary circle")
            circles.append((Circle(k.center, k.radius),))
        return PolyContour(tuple(circles))

    def grid(self, radii: int, angles: int, exclude_hyperplanes: bool = False) -> np.ndarray:
        per_factor = [k.grid(radii, angles) for k in self.factors]
        return _tensor_points(per_factor, exclude_hyperplanes)


def _check_dim(a: int, b: int) -> None:
    if a != b:
        raise DimensionMismatchError(f"Dimension mismatch: {a} != {b}")


def _tensor_points(per_factor: Sequence[np.ndarray], exclude_hyperplanes: bool) -> np.ndarray:
    points = np.array(list(itertools.product(*per_factor)), dtype=complex).reshape(-1, len(per_factor))
    if exclude_hyperplanes:
        points = points[np.all(points != 0, axis=-1)]
    return points


# free functions


def contains(domain: ProductDomain, z):
    return domain.contains(z)


def inverse_scale(domain: ProductDomain, z) -> ProductDomain:
    return domain.inverse_scale(z)


def dilation_set(domain: ProductDomain) -> DilationSet:
    return domain.dilation_set()


def distinguished_boundary(region: ProductDomain | CompactBox) -> PolyContour:
    return region.distinguished_boundary()


def _reach_from(inner, origin: complex) -> float:
    """Radius of the smallest origin-centered closed disc containing `inner`."""
    if isinstance(inner, (Disc, ClosedDisc)):
        return abs(inner.center - origin) + inner.radius
    if isinstance(inner, (Annulus, ClosedAnnulus)):
        return abs(origin) + inner.r_out
    if isinstance(inner, (list, tuple)):
        return max((_reach_from(piece, origin) for piece in inner), default=0.0)
    return abs(complex(inner) - origin)


def _annular_span(inner) -> tuple[float, float]:
    """Moduli range (lo, hi) occupied by `inner` around the origin."""
    if isinstance(inner, (Annulus, ClosedAnnulus)):
        return inner.r_in, inner.r_out
    if isinstance(inner, (Disc, ClosedDisc)):
        return abs(inner.center) - inner.radius, abs(inner.center) + inner.radius
    if isinstance(inner, (list, tuple)):
        spans = [_annular_span(piece) for piece in inner]
        return min(s[0] for s in spans), max(s[1] for s in spans)
    modulus = abs(complex(inner))
    return modulus, modulus


def separating_contour(inner, outer: PlanarFactor, margin: float | None = None) -> tuple[Circle, ...]:
    """Circles winding once around `inner` and zero times around the complement of `outer`.

    `inner` is a closed piece, an open factor (taken with its closure), a point or a
    list of those. The radius is log-interpolated between the reach of `inner` and
    the boundary of `outer`; margin 0.5 gives the geometric mean. A point at the
    center of a disc is replaced by a small disc of relative radius `inner_radius_floor`.
    """
    if margin is None:
        margin = quadrature_setting.contour_margin
    if not 0.0 < margin < 1.0:
        raise ContourPlacementError(f"Contour margin must lie in (0, 1), got {margin}")
    floor = quadrature_setting.inner_radius_floor

    if isinstance(outer, Disc):
        rho = _reach_from(inner, outer.center)
        if rho >= outer.radius:
            raise ContourPlacementError(
                f"Inner region of reach {rho:g} touches the boundary of {outer}"
            )
        rho = max(rho, floor * outer.radius)
        radius = rho ** (1.0 - margin) * outer.radius ** margin
        logger.debug(f"Separating circle at radius {radius:.6g} around {outer.center}")
        return (Circle(outer.center, radius, 1),)

    if isinstance(outer, Annulus):
        lo, hi = _annular_span(inner)
        if lo <= outer.r_in or hi >= outer.r_out:
            raise ContourPlacementError(
                f"Inner region [{lo:g}, {hi:g}] is not compactly inside {outer}"
            )
        r_outer = hi ** (1.0 - margin) * outer.r_out ** margin
        r_inner = lo ** (1.0 - margin) * outer.r_in ** margin
        return (Circle(0.0, r_outer, 1), Circle(0.0, r_inner, -1))

    raise UnsupportedGeometryError(f"Unsupported outer factor: {outer!r}")


def separating_polycontour(inner: Sequence, domain: ProductDomain, margin: float | None = None) -> PolyContour:
    """Factorwise separating_contour; `inner[j]` is the inner piece of factor j."""
    _check_dim(len(inner), domain.dim)
    return PolyContour(tuple(
        separating_contour(piece, factor, margin) for piece, factor in zip(inner, domain.factors)
    ))


def snug_contour(inner, outer: PlanarFactor, ratio: float, margin: float | None = None) -> tuple[Circle, ...]:
    """Separating circles pulled in to at most `ratio` times the reach of `inner`.

    Moments carry the factor (r/ρ)^|α| in their round-off, so integrands of high
    monomial order want the circle close to the singularities. A singular set reduced
    to the disc center gets the unit circle when it fits, at most half the outer radius.
    """
    if not isinstance(outer, Disc):
        return separating_contour(inner, outer, margin)
    rho = _reach_from(inner, outer.center)
    if rho >= outer.radius:
        raise ContourPlacementError(f"Inner region of reach {rho:g} touches the boundary of {outer}")
    if rho == 0.0:
        return (Circle(outer.center, min(1.0, outer.radius / min(ratio, 2.0)), 1),)
    default = separating_contour(inner, outer, margin)[0]
    return (Circle(outer.center, min(default.radius, rho * ratio), 1),)


def snug_polycontour(inner: Sequence, domain: ProductDomain, ratio: float,
                     margin: float | None = None) -> PolyContour:
    _check_dim(len(inner), domain.dim)
    return PolyContour(tuple(
        snug_contour(piece, factor, ratio, margin) for piece, factor in zip(inner, domain.factors)
    ))
