"""
Germs on products of complements

A germ is an evaluator of n complex variables together with the closed discs
(per variable) that contain its singular set on the Laurent side. Laurent germs
live at (∞,…,∞) and vanish there; Taylor germs live at the origin. The pairing
ψ̂(u) = ψ(1/u)/(u₁⋯uₙ) moves between the two and is an involution.
"""
from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Callable, Literal, Sequence

import numpy as np
from numpy.polynomial import Polynomial

from utils import logger

from ..domains import ClosedDisc
from ..exceptions import ContourPlacementError, DimensionMismatchError, UnsupportedGeometryError
from ..quadrature import laurent_moments, taylor_coefficients, sample
from ..series import TaylorPoly, TruncationBox, as_points
from ..settings import quadrature_setting, tolerance_setting

GermSide = Literal['laurent', 'taylor']

# roots closer than this are one pole of higher order
POLE_MERGE = 1e-7


def _as_polynomial(value) -> Polynomial:
    coef = value.coef if isinstance(value, Polynomial) else value
    return Polynomial(np.atleast_1d(np.asarray(coef, dtype=complex)))


def _trim(poly: Polynomial) -> Polynomial:
    coef = np.asarray(poly.coef, dtype=complex)
    nonzero = np.nonzero(coef)[0]
    if nonzero.size == 0:
        return Polynomial([0j])
    return Polynomial(coef[:nonzero[-1] + 1])


def _degree(poly: Polynomial) -> int:
    coef = np.asarray(poly.coef)
    nonzero = np.nonzero(coef)[0]
    return int(nonzero[-1]) if nonzero.size else -1


def _reversed(poly: Polynomial, degree: int) -> Polynomial:
    """u^degree · p(1/u)"""
    coef = np.zeros(degree + 1, dtype=complex)
    src = np.asarray(poly.coef, dtype=complex)
    coef[:src.size] = src
    return Polynomial(coef[::-1])


@dataclass(frozen=True, eq=False)
class RationalFactor:
    """Univariate p/q with exact coefficient data (ascending powers)."""
    numerator: Polynomial
    denominator: Polynomial

    def __post_init__(self):
        numerator = _trim(_as_polynomial(self.numerator))
        denominator = _trim(_as_polynomial(self.denominator))
        if _degree(denominator) < 0:
            raise UnsupportedGeometryError("Rational factor has a zero denominator")
        if not (np.all(np.isfinite(numerator.coef)) and np.all(np.isfinite(denominator.coef))):
            raise UnsupportedGeometryError("Rational factor coefficients must be finite")
        object.__setattr__(self, 'numerator', numerator)
        object.__setattr__(self, 'denominator', denominator)

    @classmethod
    def from_coefficients(cls, numerator: Sequence[complex], denominator: Sequence[complex]) -> "RationalFactor":
        return cls(Polynomial(np.asarray(numerator, dtype=complex)), Polynomial(np.asarray(denominator, dtype=complex)))

    @classmethod
    def simple_pole(cls, pole: complex, residue: complex = 1.0) -> "RationalFactor":
        """residue / (w - pole)"""
        return cls.from_coefficients([residue], [-complex(pole), 1.0])

    @classmethod
    def from_poles(cls, poles: Sequence[complex], numerator: Sequence[complex] = (1.0,)) -> "RationalFactor":
        return cls(Polynomial(np.asarray(numerator, dtype=complex)),
                   Polynomial(np.polynomial.polynomial.polyfromroots(np.asarray(poles, dtype=complex))))

    @classmethod
    def from_partial_fractions(cls, residues: Sequence[complex], poles: Sequence[complex]) -> "RationalFactor":
        """Σ rᵢ / (w - pᵢ) over distinct simple poles."""
        poles = np.asarray(poles, dtype=complex)
        denominator = Polynomial(np.polynomial.polynomial.polyfromroots(poles))
        numerator = Polynomial([0j])
        for i, r in enumerate(residues):
            others = np.delete(poles, i)
            numerator = numerator + r * Polynomial(np.polynomial.polynomial.polyfromroots(others))
        return cls(numerator, denominator)

    @classmethod
    def constant(cls, value: complex = 1.0) -> "RationalFactor":
        return cls.from_coefficients([value], [1.0])

    @property
    def numerator_degree(self) -> int:
        return _degree(self.numerator)

    @property
    def denominator_degree(self) -> int:
        return _degree(self.denominator)

    def is_zero(self) -> bool:
        return self.numerator_degree < 0

    def vanishes_at_infinity(self) -> bool:
        return self.numerator_degree < self.denominator_degree

    def holomorphic_at_origin(self) -> bool:
        return self.denominator.coef[0] != 0 or self.is_zero()

    def __call__(self, w):
        w = np.asarray(w, dtype=complex)
        return self.numerator(w) / self.denominator(w)

    def poles(self) -> np.ndarray:
        if self.is_zero() or self.denominator_degree == 0:
            return np.zeros(0, dtype=complex)
        return np.asarray(self.denominator.roots(), dtype=complex)

    def paired(self) -> "RationalFactor":
        """f̂(u) = f(1/u)/u, exactly on coefficients."""
        if self.is_zero():
            return self
        dp, dq = self.numerator_degree, self.denominator_degree
        p_rev, q_rev = _reversed(self.numerator, dp), _reversed(self.denominator, dq)
        excess = dq - 1 - dp
        if excess >= 0:
            shift = Polynomial(np.r_[np.zeros(excess), 1.0].astype(complex))
            return RationalFactor(p_rev * shift, q_rev)
        shift = Polynomial(np.r_[np.zeros(-excess), 1.0].astype(complex))
        return RationalFactor(p_rev, q_rev * shift)

    def series_coefficients(self, degree: int) -> np.ndarray:
        """Taylor coefficients at 0 up to `degree` by exact long division."""
        if self.is_zero():
            return np.zeros(degree + 1, dtype=complex)
        q = np.asarray(self.denominator.coef, dtype=complex)
        if q[0] == 0:
            raise UnsupportedGeometryError("Rational factor has a pole at the origin")
        p = np.zeros(degree + 1, dtype=complex)
        src = np.asarray(self.numerator.coef, dtype=complex)[:degree + 1]
        p[:src.size] = src
        c = np.zeros(degree + 1, dtype=complex)
        for k in range(degree + 1):
            span = min(k, q.size - 1)
            acc = p[k] - np.dot(q[1:span + 1], c[k - 1::-1][:span]) if span else p[k]
            c[k] = acc / q[0]
        return c

    def laurent_coefficients(self, degree: int) -> np.ndarray:
        """m_k with f(w) = Σ m_k / w^(k+1) at infinity."""
        if not self.is_zero() and not self.vanishes_at_infinity():
            raise UnsupportedGeometryError("Rational factor does not vanish at infinity")
        return self.paired().series_coefficients(degree)

    def partial_fractions(self) -> tuple[np.ndarray, np.ndarray] | None:
        """(residues, poles) when the factor is proper with simple poles, else None."""
        if self.is_zero():
            return np.zeros(0, dtype=complex), np.zeros(0, dtype=complex)
        if not self.vanishes_at_infinity():
            return None
        poles = self.poles()
        if poles.size > 1:
            gaps = np.abs(poles[:, None] - poles[None, :]) + np.eye(poles.size)
            if np.min(gaps) < POLE_MERGE * max(1.0, float(np.max(np.abs(poles)))):
                return None
        derivative = self.denominator.deriv()
        residues = self.numerator(poles) / derivative(poles)
        return residues, poles

    def hadamard(self, other: "RationalFactor") -> "RationalFactor | None":
        """Σ a_k/w^(k+1) ∗̂ Σ b_k/w^(k+1) for simple-pole factors: Σ rᵢsⱼ/(w - pᵢqⱼ)."""
        left, right = self.partial_fractions(), other.partial_fractions()
        if left is None or right is None:
            return None
        if left[1].size == 0 or right[1].size == 0:
            return RationalFactor.constant(0.0)
        residues = np.multiply.outer(left[0], right[0]).ravel()
        poles = np.multiply.outer(left[1], right[1]).ravel()
        return _merge_simple_poles(residues, poles)

    def scaled(self, value: complex) -> "RationalFactor":
        return RationalFactor(self.numerator * complex(value), self.denominator)


def _merge_simple_poles(residues: np.ndarray, poles: np.ndarray) -> RationalFactor:
    merged_poles: list[complex] = []
    merged_residues: list[complex] = []
    for r, p in zip(residues, poles):
        for i, q in enumerate(merged_poles):
            if abs(p - q) <= POLE_MERGE * max(1.0, abs(q)):
                merged_residues[i] += r
                break
        else:
            merged_poles.append(p)
            merged_residues.append(r)
    return RationalFactor.from_partial_fractions(merged_residues, merged_poles)


class Germ(ABC):
    """Holomorphic germ of n variables.

    `supports[j]` lists closed discs containing the Laurent-side singular set in
    variable j: for a Laurent germ its own singularities, for a Taylor germ those of
    its paired Laurent germ.
    """
    dim: int
    side: GermSide
    supports: tuple[tuple[ClosedDisc, ...], ...]

    @abstractmethod
    def evaluate(self, points: np.ndarray) -> np.ndarray:
        """Values at points of shape (..., n)."""

    def __call__(self, points):
        return self.evaluate(as_points(points, self.dim))

    def vanishing_at_infinity(self) -> tuple[bool, ...]:
        return check_vanishing_at_infinity(self)

    def support_radius(self, j: int, origin: complex = 0.0) -> float:
        return max((d.reach(origin) for d in self.supports[j]), default=0.0)

    def support_radii(self) -> tuple[float, ...]:
        return tuple(self.support_radius(j) for j in range(self.dim))

    def compactly_inside(self, domain) -> bool:
        """Every support disc lies compactly in the corresponding factor of `domain`."""
        return all(
            all(d.is_inside(factor) for d in discs)
            for discs, factor in zip(self.supports, domain.factors)
        )

    # sequences

    def laurent_sequence(self, box: TruncationBox, nodes=None) -> np.ndarray:
        """Laurent coefficients at (∞,…,∞), by quadrature beyond the supports."""
        germ = self if self.side == 'laurent' else self.paired()
        radii = tuple(max(2.0 * r, 1.0) for r in germ.support_radii())
        return laurent_moments(germ, radii, box, nodes, singular_radii=germ.support_radii())

    def taylor_sequence(self, box: TruncationBox, nodes=None) -> np.ndarray:
        """Taylor coefficients at the origin, by quadrature inside the reciprocal supports."""
        germ = self if self.side == 'taylor' else self.paired()
        radii = tuple(0.5 / r if r > 0 else 1.0 for r in germ.support_radii())
        return taylor_coefficients(germ, tuple(0.0 for _ in radii), radii, box, nodes).coeffs

    # algebra

    def paired(self) -> "Germ":
        return PairedGerm(self)

    def scaled(self, value: complex) -> "Germ":
        value = complex(value)
        return CallableGerm(lambda p: value * self.evaluate(p), self.dim, self.side, self.supports)

    def __mul__(self, value: complex) -> "Germ":
        return self.scaled(value)

    __rmul__ = __mul__

    def __add__(self, other: "Germ") -> "Germ":
        _check_compatible(self, other)
        supports = tuple(a + b for a, b in zip(self.supports, other.supports))
        return CallableGerm(lambda p: self.evaluate(p) + other.evaluate(p), self.dim, self.side, supports)


def _check_compatible(a: Germ, b: Germ) -> None:
    if a.dim != b.dim:
        raise DimensionMismatchError(f"Germs of dimension {a.dim} and {b.dim}")
    if a.side != b.side:
        raise UnsupportedGeometryError(f"Cannot combine a {a.side} germ with a {b.side} germ")


def _other_side(side: GermSide) -> GermSide:
    return 'taylor' if side == 'laurent' else 'laurent'


def _pair_points(points: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    with np.errstate(divide='ignore', invalid='ignore'):
        return 1.0 / points, 1.0 / np.prod(points, axis=-1)


@dataclass(frozen=True, eq=False)
class CallableGerm(Germ):
    """Arbitrary evaluator with declared supports."""
    fn: Callable[[np.ndarray], np.ndarray]
    dim: int
    side: GermSide = 'laurent'
    supports: tuple[tuple[ClosedDisc, ...], ...] = field(default=())

    def __post_init__(self):
        supports = tuple(tuple(s) for s in self.supports) or tuple(() for _ in range(self.dim))
        if len(supports) != self.dim:
            raise DimensionMismatchError(f"Expected supports for {self.dim} variables, got {len(supports)}")
        object.__setattr__(self, 'supports', supports)

    def evaluate(self, points: np.ndarray) -> np.ndarray:
        return np.asarray(self.fn(points), dtype=complex)


@dataclass(frozen=True, eq=False)
class PairedGerm(Germ):
    """ψ̂(u) = ψ(1/u)/(u₁⋯uₙ) of a germ without exact coefficient data."""
    base: Germ

    @property
    def dim(self) -> int:
        return self.base.dim

    @property
    def side(self) -> GermSide:
        return _other_side(self.base.side)

    @property
    def supports(self):
        return self.base.supports

    def evaluate(self, points: np.ndarray) -> np.ndarray:
        inverse, weight = _pair_points(points)
        return self.base.evaluate(inverse) * weight

    def paired(self) -> Germ:
        return self.base


@dataclass(frozen=True, eq=False)
class SeparableGerm(Germ):
    """Σ_t weight_t Π_j factor_{t,j}(w_j) with exact rational factors."""
    terms: tuple[tuple[complex, tuple[RationalFactor, ...]], ...]
    dim: int
    side: GermSide = 'laurent'

    def __post_init__(self):
        terms = tuple((complex(w), tuple(fs)) for w, fs in self.terms)
        for _, factors in terms:
            if len(factors) != self.dim:
                raise DimensionMismatchError(f"Term with {len(factors)} factors in dimension {self.dim}")
        object.__setattr__(self, 'terms', terms)

    @classmethod
    def product_poles(cls, poles: Sequence[complex], weight: complex = 1.0) -> "SeparableGerm":
        """weight · Π 1/(wⱼ - cⱼ): the Cauchy kernel of the point evaluation at c."""
        poles = [complex(c) for c in poles]
        return cls(((weight, tuple(RationalFactor.simple_pole(c) for c in poles)),), len(poles))

    @classmethod
    def geometric(cls, ratios: Sequence[complex], weight: complex = 1.0) -> "SeparableGerm":
        """weight · Π 1/(1 - cⱼwⱼ), the Taylor germ with coefficients c^α."""
        factors = tuple(RationalFactor.from_coefficients([1.0], [1.0, -complex(c)]) for c in ratios)
        return cls(((weight, factors),), len(factors), 'taylor')

    @classmethod
    def zero(cls, dim: int, side: GermSide = 'laurent') -> "SeparableGerm":
        return cls((), dim, side)

    def _laurent_factors(self) -> list[tuple[RationalFactor, ...]]:
        if self.side == 'laurent':
            return [factors for _, factors in self.terms]
        return [tuple(f.paired() for f in factors) for _, factors in self.terms]

    @property
    def supports(self) -> tuple[tuple[ClosedDisc, ...], ...]:
        per_variable: list[list[ClosedDisc]] = [[] for _ in range(self.dim)]
        for weight, factors in zip([w for w, _ in self.terms], self._laurent_factors()):
            if weight == 0 or any(f.is_zero() for f in factors):
                continue
            for j, f in enumerate(factors):
                for pole in f.poles():
                    if not any(abs(pole - d.center) <= POLE_MERGE for d in per_variable[j]):
                        per_variable[j].append(ClosedDisc(pole, 0.0))
        return tuple(tuple(p) for p in per_variable)

    def evaluate(self, points: np.ndarray) -> np.ndarray:
        points = np.asarray(points, dtype=complex)
        result = np.zeros(points.shape[:-1], dtype=complex)
        for weight, factors in self.terms:
            term = np.full(points.shape[:-1], weight, dtype=complex)
            for j, f in enumerate(factors):
                term = term * f(points[..., j])
            result = result + term
        return result

    def vanishing_at_infinity(self) -> tuple[bool, ...]:
        if self.side == 'taylor':
            return super().vanishing_at_infinity()
        return tuple(
            all(factors[j].is_zero() or factors[j].vanishes_at_infinity() or weight == 0
                for weight, factors in self.terms)
            for j in range(self.dim)
        )

    def paired(self) -> "SeparableGerm":
        return SeparableGerm(
            tuple((w, tuple(f.paired() for f in factors)) for w, factors in self.terms),
            self.dim, _other_side(self.side),
        )

    def _sequence(self, box: TruncationBox, coefficients) -> np.ndarray:
        result = np.zeros(box.shape, dtype=complex)
        for weight, factors in self.terms:
            term = np.asarray(weight, dtype=complex)
            for f, d in zip(factors, box.degree_bounds):
                term = np.multiply.outer(term, coefficients(f, d))
            result += term.reshape(box.shape)
        return result

    def laurent_sequence(self, box: TruncationBox, nodes=None) -> np.ndarray:
        if self.side == 'taylor':
            return self.paired().laurent_sequence(box)
        return self._sequence(box, lambda f, d: f.laurent_coefficients(d))

    def taylor_sequence(self, box: TruncationBox, nodes=None) -> np.ndarray:
        if self.side == 'laurent':
            return self.paired().taylor_sequence(box)
        return self._sequence(box, lambda f, d: f.series_coefficients(d))

    def scaled(self, value: complex) -> "SeparableGerm":
        return SeparableGerm(tuple((w * complex(value), fs) for w, fs in self.terms), self.dim, self.side)

    def __add__(self, other: Germ) -> Germ:
        if isinstance(other, SeparableGerm):
            _check_compatible(self, other)
            return SeparableGerm(self.terms + other.terms, self.dim, self.side)
        return super().__add__(other)

    def hadamard(self, other: "SeparableGerm") -> "SeparableGerm | None":
        """Exact Laurent-side Hadamard product; None when a factor has repeated poles."""
        left, right = self.paired() if self.side == 'taylor' else self, other.paired() if other.side == 'taylor' else other
        terms = []
        for w1, f1 in left.terms:
            for w2, f2 in right.terms:
                factors = [a.hadamard(b) for a, b in zip(f1, f2)]
                if any(f is None for f in factors):
                    return None
                terms.append((w1 * w2, tuple(factors)))
        return SeparableGerm(tuple(terms), self.dim, 'laurent')


@dataclass(frozen=True, eq=False)
class TruncatedGerm(Germ):
    """Σ_{α∈box} m_α / w^(α+1) (Laurent side) or Σ m_α w^α (Taylor side)."""
    sequence: np.ndarray
    side: GermSide = 'laurent'

    def __post_init__(self):
        sequence = np.array(self.sequence, dtype=complex, copy=True)
        sequence.setflags(write=False)
        object.__setattr__(self, 'sequence', sequence)

    @property
    def dim(self) -> int:
        return self.sequence.ndim

    @property
    def polynomial(self) -> TaylorPoly:
        return TaylorPoly(self.sequence)

    @property
    def supports(self):
        # a Laurent polynomial in 1/w is singular only at the origin
        if np.any(self.sequence != 0):
            return tuple((ClosedDisc(0.0, 0.0),) for _ in range(self.dim))
        return tuple(() for _ in range(self.dim))

    def evaluate(self, points: np.ndarray) -> np.ndarray:
        points = np.asarray(points, dtype=complex)
        if self.side == 'taylor':
            return self.polynomial.evaluate(points)
        inverse, weight = _pair_points(points)
        return self.polynomial.evaluate(inverse) * weight

    def paired(self) -> "TruncatedGerm":
        return TruncatedGerm(self.sequence, _other_side(self.side))

    def laurent_sequence(self, box: TruncationBox, nodes=None) -> np.ndarray:
        return _window(self.sequence, box)

    taylor_sequence = laurent_sequence


def _window(sequence: np.ndarray, box: TruncationBox) -> np.ndarray:
    """The sequence on `box`, zero beyond its own window."""
    result = np.zeros(box.shape, dtype=complex)
    common = tuple(slice(0, min(s, b)) for s, b in zip(sequence.shape, box.shape))
    result[common] = sequence[common]
    return result


def check_vanishing_at_infinity(germ: Germ, radii: Sequence[float] | None = None) -> tuple[bool, ...]:
    """Per variable: |germ| decreases along rays as that variable grows (others held at 1)."""
    if radii is None:
        radii = tolerance_setting.vanishing_radii
    rays = np.exp(2j * np.pi * (np.arange(4) + 0.25) / 4)
    flags = []
    for j in range(germ.dim):
        magnitudes = []
        for radius in radii:
            points = np.ones((rays.size, germ.dim), dtype=complex) * (1.0 + 0.5j)
            points[:, j] = radius * rays
            if germ.side == 'taylor':
                points = 1.0 / points
                values = germ.evaluate(points) * np.prod(points, axis=-1)
            else:
                values = germ.evaluate(points)
            magnitudes.append(float(np.max(np.abs(values))))
        flags.append(all(np.isfinite(magnitudes)) and (magnitudes[-1] < magnitudes[0] or magnitudes[-1] == 0.0))
    return tuple(flags)


def hadamard_germ(first: Germ, second: Germ, nodes: int | None = None) -> Germ:
    """Laurent germ with coefficients a_α b_α.

    Exact on separable germs with simple poles; otherwise evaluates
    (1/Πw)(1/2πi)ⁿ ∮ ψ₁(ζ) ψ̂₂(ζ/w) dζ on circles of radius √(ρ₁|w|/ρ₂) per point.
    """
    _check_compatible_dims(first, second)
    if isinstance(first, SeparableGerm) and isinstance(second, SeparableGerm):
        exact = first.hadamard(second)
        if exact is not None:
            return exact
    left = first if first.side == 'laurent' else first.paired()
    right_taylor = second if second.side == 'taylor' else second.paired()
    right_radii = np.array(right_taylor.support_radii())
    left_radii = np.array(left.support_radii())
    count = nodes or quadrature_setting.min_nodes
    dim = first.dim
    # bound the (points × nodes) block held in memory
    chunk = max(1, min(quadrature_setting.evaluation_chunk, 2 ** 20 // count ** dim))
    floor = quadrature_setting.inner_radius_floor

    supports = tuple(
        (ClosedDisc(0.0, left.support_radius(j) * right_taylor.support_radius(j)),) for j in range(dim)
    )
    theta = 2.0 * np.pi * np.arange(count) / count
    unit = np.exp(1j * theta)

    def evaluate(points: np.ndarray) -> np.ndarray:
        points = np.asarray(points, dtype=complex)
        flat = points.reshape(-1, dim)
        out = np.empty(flat.shape[0], dtype=complex)
        for start in range(0, flat.shape[0], chunk):
            block = flat[start:start + chunk]
            out[start:start + chunk] = _hadamard_block(block)
        return out.reshape(points.shape[:-1])

    def _hadamard_block(block: np.ndarray) -> np.ndarray:
        modulus = np.abs(block)
        lo = np.where(left_radii > 0, left_radii, 0.0)
        hi = np.where(right_radii > 0, modulus / np.where(right_radii > 0, right_radii, 1.0), np.inf)
        lo = np.where(lo > 0, lo, np.where(np.isfinite(hi), floor * hi, floor))
        hi = np.where(np.isfinite(hi), hi, lo / floor)
        if np.any(lo >= hi):
            raise ContourPlacementError("Hadamard integral has no admissible circle at these points")
        radius = np.sqrt(lo * hi)
        # nodes per point and variable: (P, n, N)
        zeta = radius[..., None] * unit
        weights = zeta / count
        grids = np.meshgrid(*[np.arange(count)] * dim, indexing='ij')
        index = np.stack([g.ravel() for g in grids], axis=-1)
        nodes_tensor = np.stack([zeta[:, j, index[:, j]] for j in range(dim)], axis=-1)
        weight_tensor = np.prod(np.stack([weights[:, j, index[:, j]] for j in range(dim)], axis=-1), axis=-1)
        values = sample(left, nodes_tensor) * sample(right_taylor, nodes_tensor / block[:, None, :])
        return np.sum(values * weight_tensor, axis=-1) / np.prod(block, axis=-1)

    logger.debug(f"Hadamard germ by quadrature with {count} nodes per variable")
    return CallableGerm(evaluate, dim, 'laurent', supports)


def _check_compatible_dims(a: Germ, b: Germ) -> None:
    if a.dim != b.dim:
        raise DimensionMismatchError(f"Germs of dimension {a.dim} and {b.dim}")


def random_rational_germ(rng: np.random.Generator, dim: int, max_terms: int = 2, max_poles: int = 2,
                         pole_radius: float = 0.5) -> SeparableGerm:
    """Separable Laurent germ with simple poles in |w| ≤ pole_radius and proper factors."""
    terms = []
    for _ in range(int(rng.integers(1, max_terms + 1))):
        factors = []
        for _ in range(dim):
            count = int(rng.integers(1, max_poles + 1))
            poles = pole_radius * np.sqrt(rng.uniform(0.0, 1.0, count)) * np.exp(2j * np.pi * rng.uniform(0.0, 1.0, count))
            numerator = rng.standard_normal(count) + 1j * rng.standard_normal(count)
            factors.append(RationalFactor.from_poles(poles, numerator))
        weight = complex(rng.standard_normal() + 1j * rng.standard_normal())
        terms.append((weight, tuple(factors)))
    return SeparableGerm(tuple(terms), dim)


