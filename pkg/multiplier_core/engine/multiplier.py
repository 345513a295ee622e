"""
Multiplier values

A multiplier is its sequence on a truncation box, the product domain it acts on
and the object it was built from. Germ and functional provenance keep the kernel
so the contour formulas can be evaluated; bare sequences act coefficientwise.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any

import numpy as np

from utils import logger

from ..domains import ProductDomain
from ..duality import Germ, SeparableGerm, TruncatedGerm
from ..exceptions import (
    CarrierMembershipError,
    DimensionMismatchError,
    NonFiniteCoefficientError,
    NonRungeDomainError,
)
from ..series import Point, TaylorPoly, TruncationBox, as_point
from ..settings import grid_setting


class ProvenanceKind(Enum):
    FUNCTIONAL = "functional"
    LAURENT_GERM = "laurent_germ"
    TAYLOR_GERM = "taylor_germ"
    SEQUENCE = "sequence"


@dataclass(frozen=True)
class Provenance:
    kind: ProvenanceKind = ProvenanceKind.SEQUENCE
    source: Any = None


def check_carrier_membership(germ: Germ, domain: ProductDomain, points: np.ndarray | None = None,
                             radii: int | None = None, angles: int | None = None) -> None:
    """Sampled 𝓕-membership: the germ's supports lie compactly in z⁻¹Ω at every sample z.

    Without explicit points each factor is sampled on its own radial grid; the test
    is factorwise, so this covers the full tensor grid.
    """
    radii = radii or grid_setting.radii
    angles = angles or grid_setting.angles
    for j, (discs, factor) in enumerate(zip(germ.supports, domain.factors)):
        column = factor.grid(radii, angles) if points is None else np.asarray(points)[:, j]
        for zj in column:
            if zj == 0:
                continue
            target = factor.scale_by_inverse(zj)
            for disc in discs:
                if not disc.is_inside(target):
                    raise CarrierMembershipError(
                        f"Support {disc} is not compactly inside z⁻¹Ω in variable {j} at z_{j} = {zj:.6g}"
                    )
    logger.debug(f"Carrier membership holds on the sampled grid of {domain}")


@dataclass(frozen=True, eq=False)
class Multiplier:
    domain: ProductDomain
    sequence: np.ndarray
    provenance: Provenance = field(default_factory=Provenance)

    def __post_init__(self):
        if not self.domain.is_runge():
            raise NonRungeDomainError(f"Multipliers need a product of discs, got {self.domain}")
        sequence = np.array(self.sequence, dtype=complex, copy=True)
        if sequence.ndim != self.domain.dim:
            raise DimensionMismatchError(
                f"Sequence of dimension {sequence.ndim} on a domain of dimension {self.domain.dim}"
            )
        if not np.all(np.isfinite(sequence)):
            raise NonFiniteCoefficientError("Multiplier sequence must be finite")
        sequence.setflags(write=False)
        object.__setattr__(self, 'sequence', sequence)

    # constructors

    @classmethod
    def from_sequence(cls, domain: ProductDomain, sequence) -> "Multiplier":
        if isinstance(sequence, TaylorPoly):
            sequence = sequence.coeffs
        return cls(domain, np.asarray(sequence, dtype=complex))

    @classmethod
    def from_laurent_germ(cls, germ: Germ, domain: ProductDomain, box: TruncationBox,
                          check_membership: bool = True) -> "Multiplier":
        if check_membership:
            check_carrier_membership(germ, domain)
        sequence = germ.laurent_sequence(box)
        return cls(domain, sequence, Provenance(ProvenanceKind.LAURENT_GERM, germ))

    @classmethod
    def from_taylor_germ(cls, germ: Germ, domain: ProductDomain, box: TruncationBox,
                         check_membership: bool = True) -> "Multiplier":
        if check_membership:
            check_carrier_membership(germ, domain)
        sequence = germ.taylor_sequence(box)
        return cls(domain, sequence, Provenance(ProvenanceKind.TAYLOR_GERM, germ))

    @classmethod
    def dilation(cls, domain: ProductDomain, c, box: TruncationBox) -> "Multiplier":
        """f ↦ f(c·), sequence c^α, kernel Π 1/(wⱼ - cⱼ)."""
        c = as_point(c)
        return cls.from_laurent_germ(SeparableGerm.product_poles(c.coords), domain, box)

    @classmethod
    def identity(cls, domain: ProductDomain, box: TruncationBox) -> "Multiplier":
        return cls.dilation(domain, Point.ones(domain.dim), box)

    @classmethod
    def zero(cls, domain: ProductDomain, box: TruncationBox) -> "Multiplier":
        return cls.from_laurent_germ(SeparableGerm.zero(domain.dim), domain, box)

    # views

    @property
    def dim(self) -> int:
        return self.domain.dim

    @property
    def box(self) -> TruncationBox:
        return TruncationBox(tuple(s - 1 for s in self.sequence.shape))

    @property
    def kind(self) -> ProvenanceKind:
        return self.provenance.kind

    def as_series(self) -> TaylorPoly:
        return TaylorPoly(self.sequence)

    def sequence_on(self, box: TruncationBox) -> np.ndarray:
        """Sequence on `box`, zero where the multiplier's own box ends."""
        result = np.zeros(box.shape, dtype=complex)
        common = tuple(slice(0, min(s, b)) for s, b in zip(self.sequence.shape, box.shape))
        result[common] = self.sequence[common]
        return result

    def laurent_kernel(self) -> Germ | None:
        """Laurent-side germ carried by the provenance, if any."""
        if self.kind is ProvenanceKind.FUNCTIONAL:
            return self.provenance.source.kernel
        if self.kind is ProvenanceKind.LAURENT_GERM:
            return self.provenance.source
        if self.kind is ProvenanceKind.TAYLOR_GERM:
            return self.provenance.source.paired()
        return None

    def truncated_germ(self) -> TruncatedGerm:
        return TruncatedGerm(self.sequence, 'laurent')

    def sequence_close(self, other: "Multiplier", rtol: float = 1e-9) -> bool:
        """Sequences agree on the intersection of the two boxes."""
        common = self.box.intersect(other.box)
        a, b = self.sequence_on(common), other.sequence_on(common)
        scale = max(float(np.max(np.abs(a))), float(np.max(np.abs(b))), 0.0)
        return bool(np.all(np.abs(a - b) <= rtol * max(scale, np.finfo(float).tiny)))

