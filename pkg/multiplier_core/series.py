"""
Truncated multivariate power series

Dense coefficient tensors over per-variable degree boxes, with nested Horner
evaluation, dilatation f_z(w) = f(zw), coefficientwise (Hadamard) products and
exact coefficient read-off. Values are immutable after construction.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

import numpy as np

from .exceptions import (
    BoxError,
    DimensionMismatchError,
    HyperplaneError,
    NonFiniteCoefficientError,
)

MultiIndex = tuple[int, ...]


def abs_index(alpha: Sequence[int]) -> int:
    """|α| = α₁ + … + αₙ"""
    return int(sum(alpha))


def index_factorial(alpha: Sequence[int]) -> int:
    """α! = α₁!⋯αₙ!"""
    return math.prod(math.factorial(a) for a in alpha)


@dataclass(frozen=True)
class TruncationBox:
    """Per-variable degree caps D = (D₁,…,Dₙ); enumerates α with αⱼ ≤ Dⱼ lexicographically."""
    degree_bounds: tuple[int, ...]

    def __post_init__(self):
        bounds = tuple(int(d) for d in self.degree_bounds)
        if not bounds:
            raise BoxError("Truncation box needs at least one variable")
        if any(d < 0 for d in bounds):
            raise BoxError(f"Degree bounds must be non-negative, got {bounds}")
        object.__setattr__(self, 'degree_bounds', bounds)

    @classmethod
    def cube(cls, dim: int, degree: int) -> "TruncationBox":
        return cls((degree,) * dim)

    @property
    def dim(self) -> int:
        return len(self.degree_bounds)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(d + 1 for d in self.degree_bounds)

    @property
    def size(self) -> int:
        return math.prod(self.shape)

    @property
    def diameter(self) -> int:
        """Largest |α| in the box."""
        return sum(self.degree_bounds)

    def contains(self, alpha: Sequence[int]) -> bool:
        if len(alpha) != self.dim:
            return False
        return all(0 <= a <= d for a, d in zip(alpha, self.degree_bounds))

    def indices(self) -> Iterator[MultiIndex]:
        return itertools.product(*(range(d + 1) for d in self.degree_bounds))

    def intersect(self, other: "TruncationBox") -> "TruncationBox":
        if other.dim != self.dim:
            raise DimensionMismatchError(f"Boxes of dimension {self.dim} and {other.dim}")
        return TruncationBox(tuple(min(a, b) for a, b in zip(self.degree_bounds, other.degree_bounds)))

    def slices(self) -> tuple[slice, ...]:
        return tuple(slice(0, d + 1) for d in self.degree_bounds)

    def total_degree_mask(self, max_order: int) -> np.ndarray:
        """Boolean tensor selecting α with |α| ≤ max_order."""
        return index_order_tensor(self) <= max_order


def index_order_tensor(box: TruncationBox) -> np.ndarray:
    """Tensor holding |α| at position α."""
    grids = np.meshgrid(*(np.arange(d + 1) for d in box.degree_bounds), indexing='ij')
    return sum(grids)


@dataclass(frozen=True)
class Point:
    """A point of ℂⁿ with coordinatewise product and inversion."""
    coords: tuple[complex, ...]

    def __post_init__(self):
        coords = tuple(complex(c) for c in self.coords)
        if not coords:
            raise DimensionMismatchError("A point needs at least one coordinate")
        if not all(np.isfinite(c) for c in coords):
            raise NonFiniteCoefficientError(f"Point has non-finite coordinates: {coords}")
        object.__setattr__(self, 'coords', coords)

    @classmethod
    def ones(cls, dim: int) -> "Point":
        return cls((1.0,) * dim)

    @property
    def dim(self) -> int:
        return len(self.coords)

    def on_hyperplane(self) -> bool:
        """Membership in 𝒩 = ℂⁿ ∖ (ℂ∖{0})ⁿ."""
        return any(c == 0 for c in self.coords)

    def inverse(self) -> "Point":
        if self.on_hyperplane():
            raise HyperplaneError(f"{self.coords} has a vanishing coordinate")
        return Point(tuple(1.0 / c for c in self.coords))

    def __mul__(self, other: "Point") -> "Point":
        other = as_point(other)
        _check_dim(self.dim, other.dim)
        return Point(tuple(a * b for a, b in zip(self.coords, other.coords)))

    __rmul__ = __mul__

    def power(self, alpha: Sequence[int]) -> complex:
        """z^α"""
        return complex(np.prod([c ** a for c, a in zip(self.coords, alpha)]))

    def as_array(self) -> np.ndarray:
        return np.array(self.coords, dtype=complex)


def as_point(z) -> Point:
    if isinstance(z, Point):
        return z
    return Point(tuple(np.ravel(np.asarray(z, dtype=complex))))


def as_points(z, dim: int | None = None) -> np.ndarray:
    """Coerce a Point, a coordinate sequence or an array of points to shape (..., n)."""
    if isinstance(z, Point):
        arr = z.as_array()
    else:
        arr = np.asarray(z, dtype=complex)
        if arr.ndim == 0:
            arr = arr.reshape(1)
    if dim is not None and arr.shape[-1] != dim:
        raise DimensionMismatchError(f"Expected points in dimension {dim}, got shape {arr.shape}")
    return arr


def _check_dim(a: int, b: int) -> None:
    if a != b:
        raise DimensionMismatchError(f"Dimension mismatch: {a} != {b}")


def monomial_tensor(z, box: TruncationBox) -> np.ndarray:
    """Tensor of z^α over the box."""
    z = as_point(z)
    _check_dim(z.dim, box.dim)
    powers = [c ** np.arange(d + 1) for c, d in zip(z.coords, box.degree_bounds)]
    result = powers[0]
    for p in powers[1:]:
        result = np.multiply.outer(result, p)
    return np.asarray(result, dtype=complex).reshape(box.shape)


def _horner(coeffs: np.ndarray, points: np.ndarray) -> np.ndarray:
    """Nested Horner evaluation, one nesting level per variable.

    points has shape batch + (n,); the result has the batch shape.
    """
    n = coeffs.ndim
    batch = points.shape[:-1]
    acc = coeffs.reshape(coeffs.shape + (1,) * len(batch))
    for axis in reversed(range(n)):
        zj = points[..., axis]
        degree = acc.shape[axis] - 1
        head = (slice(None),) * axis
        value = acc[head + (degree,)]
        for k in range(degree - 1, -1, -1):
            value = value * zj + acc[head + (k,)]
        acc = value
    return np.asarray(acc, dtype=complex)


@dataclass(frozen=True, eq=False)
class TaylorPoly:
    """Truncated Taylor series Σ f_α ζ^α over a truncation box."""
    coeffs: np.ndarray

    def __post_init__(self):
        coeffs = np.array(self.coeffs, dtype=complex, copy=True)
        if coeffs.ndim == 0:
            coeffs = coeffs.reshape(1)
        if not np.all(np.isfinite(coeffs)):
            raise NonFiniteCoefficientError("Series coefficients must be finite")
        coeffs.setflags(write=False)
        object.__setattr__(self, 'coeffs', coeffs)

    # construction

    @classmethod
    def zeros(cls, box: TruncationBox) -> "TaylorPoly":
        return cls(np.zeros(box.shape, dtype=complex))

    @classmethod
    def ones(cls, box: TruncationBox) -> "TaylorPoly":
        """The unit of the Hadamard product."""
        return cls(np.ones(box.shape, dtype=complex))

    @classmethod
    def monomial(cls, alpha: Sequence[int], box: TruncationBox, value: complex = 1.0) -> "TaylorPoly":
        if not box.contains(alpha):
            raise BoxError(f"{tuple(alpha)} is outside {box.degree_bounds}")
        coeffs = np.zeros(box.shape, dtype=complex)
        coeffs[tuple(alpha)] = value
        return cls(coeffs)

    @classmethod
    def from_terms(cls, box: TruncationBox, terms: Mapping[Sequence[int], complex]) -> "TaylorPoly":
        """Build from a sparse {α: f_α} mapping; omitted multi-indices are zero."""
        coeffs = np.zeros(box.shape, dtype=complex)
        for alpha, value in terms.items():
            alpha = tuple(int(a) for a in alpha)
            if not box.contains(alpha):
                raise BoxError(f"{alpha} is outside {box.degree_bounds}")
            coeffs[alpha] += value
        return cls(coeffs)

    @classmethod
    def random(cls, rng: np.random.Generator, box: TruncationBox, scale: float = 1.0) -> "TaylorPoly":
        data = rng.standard_normal(box.shape) + 1j * rng.standard_normal(box.shape)
        return cls(scale * data / np.sqrt(2.0))

    # shape

    @property
    def dim(self) -> int:
        return self.coeffs.ndim

    @property
    def box(self) -> TruncationBox:
        return TruncationBox(tuple(s - 1 for s in self.coeffs.shape))

    def coefficient(self, alpha: Sequence[int]) -> complex:
        if not self.box.contains(alpha):
            raise BoxError(f"{tuple(alpha)} is outside {self.box.degree_bounds}")
        return complex(self.coeffs[tuple(alpha)])

    def terms(self) -> Iterator[tuple[MultiIndex, complex]]:
        """Non-zero coefficients in lexicographic order."""
        for alpha in self.box.indices():
            value = self.coeffs[alpha]
            if value != 0:
                yield alpha, complex(value)

    # evaluation

    def evaluate(self, z):
        """Σ f_α z^α. A Point gives a complex number; an array of points gives an array."""
        if isinstance(z, Point):
            _check_dim(z.dim, self.dim)
            return complex(_horner(self.coeffs, z.as_array()))
        points = as_points(z, self.dim)
        result = _horner(self.coeffs, points)
        return complex(result) if result.ndim == 0 else result

    def __call__(self, points):
        return self.evaluate(points)

    def absolute_scale(self, z) -> float:
        """Σ |f_α| |z^α|, the magnitude against which evaluation round-off is measured."""
        magnitudes = np.abs(as_point(z).as_array())
        return float(_horner(np.abs(self.coeffs).astype(complex), magnitudes.astype(complex)).real)

    # linear structure

    def __add__(self, other: "TaylorPoly") -> "TaylorPoly":
        _check_dim(self.dim, other.dim)
        shape = tuple(max(a, b) for a, b in zip(self.coeffs.shape, other.coeffs.shape))
        coeffs = np.zeros(shape, dtype=complex)
        coeffs[tuple(slice(0, s) for s in self.coeffs.shape)] += self.coeffs
        coeffs[tuple(slice(0, s) for s in other.coeffs.shape)] += other.coeffs
        return TaylorPoly(coeffs)

    def __neg__(self) -> "TaylorPoly":
        return TaylorPoly(-self.coeffs)

    def __sub__(self, other: "TaylorPoly") -> "TaylorPoly":
        return self + (-other)

    def __mul__(self, scalar: complex) -> "TaylorPoly":
        return TaylorPoly(complex(scalar) * self.coeffs)

    __rmul__ = __mul__

    def allclose(self, other: "TaylorPoly", rtol: float = 1e-12, atol: float = 0.0) -> bool:
        if self.coeffs.shape != other.coeffs.shape:
            return False
        return bool(np.allclose(self.coeffs, other.coeffs, rtol=rtol, atol=atol))

    def to_literal(self) -> dict:
        """JSON series literal; zero coefficients are omitted."""
        return {
            'dim': self.dim,
            'box': list(self.box.degree_bounds),
            'coeffs': [
                {'alpha': list(alpha), 're': value.real, 'im': value.imag}
                for alpha, value in self.terms()
            ],
        }


def evaluate(f: TaylorPoly, z) -> complex:
    return f.evaluate(z)


def dilate(f: TaylorPoly, z) -> TaylorPoly:
    """f_z(w) = f(zw): coefficients f_α z^α on the same box."""
    return TaylorPoly(f.coeffs * monomial_tensor(z, f.box))


def hadamard(f: TaylorPoly, g: TaylorPoly) -> TaylorPoly:
    """Coefficientwise product on the intersection of the two boxes."""
    _check_dim(f.dim, g.dim)
    common = f.box.intersect(g.box)
    return TaylorPoly(f.coeffs[common.slices()] * g.coeffs[common.slices()])


def scaled_derivative(f: TaylorPoly, alpha: Sequence[int]) -> complex:
    """D^α f(0) / α!, read off the coefficient tensor."""
    return f.coefficient(alpha)
