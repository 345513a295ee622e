"""
Functionals, germs and multipliers

T ↦ M with m_α = T(ζ^α), and back through T = δ_{1ₙ}∘M. The germ maps send a
multiplier to its truncated Laurent germ at (∞,…,∞) or Taylor germ at the origin.
"""
from __future__ import annotations

import numpy as np

from utils import logger

from ..domains import ProductDomain, snug_polycontour
from ..duality import AnalyticFunctional, TruncatedGerm, moments
from ..exceptions import DimensionMismatchError, DomainMembershipError
from ..quadrature import balanced_ratio, resolve_nodes
from ..series import Point, TruncationBox
from .multiplier import Multiplier, Provenance, ProvenanceKind, check_carrier_membership


def multiplier_from_functional(functional: AnalyticFunctional, domain: ProductDomain, box: TruncationBox,
                               check_membership: bool = True) -> Multiplier:
    """Φ(T): the multiplier whose sequence is the moment sequence of T."""
    if functional.dim != domain.dim:
        raise DimensionMismatchError(f"Functional of dimension {functional.dim} on a domain of dimension {domain.dim}")
    if check_membership:
        check_carrier_membership(functional.kernel, domain)
    sequence = moments(functional, box)
    return Multiplier(domain, sequence, Provenance(ProvenanceKind.FUNCTIONAL, functional))


def functional_from_multiplier(multiplier: Multiplier, nodes=None) -> AnalyticFunctional:
    """Θ(M) = δ_{1ₙ}∘M, carried by the multiplier's kernel on a contour in Ω."""
    domain = multiplier.domain
    if not domain.contains(Point.ones(domain.dim)):
        raise DomainMembershipError(f"The point (1,…,1) is not in {domain}; δ_1∘M is undefined")
    kernel = multiplier.laurent_kernel() or multiplier.truncated_germ()
    box = multiplier.box
    counts = resolve_nodes(nodes, domain.dim, box)
    contour = snug_polycontour(list(kernel.supports), domain, balanced_ratio(min(counts), box.diameter))
    logger.debug(f"Θ(M) on radii {contour.radii()} with {counts} nodes")
    return AnalyticFunctional(kernel, contour, counts)


def laurent_germ(multiplier: Multiplier) -> TruncatedGerm:
    """Σ m_α / w^(α+1) over the multiplier's box."""
    return TruncatedGerm(multiplier.sequence, 'laurent')


def taylor_germ(multiplier: Multiplier) -> TruncatedGerm:
    """Σ m_α w^α over the multiplier's box."""
    return TruncatedGerm(multiplier.sequence, 'taylor')


def sequence_distance(first: np.ndarray, second: np.ndarray) -> float:
    """Largest entrywise gap on the common window, relative to the larger sup norm."""
    common = tuple(slice(0, min(a, b)) for a, b in zip(np.shape(first), np.shape(second)))
    a, b = np.asarray(first)[common], np.asarray(second)[common]
    if a.size == 0:
        return 0.0
    scale = max(float(np.max(np.abs(a))), float(np.max(np.abs(b))))
    gap = float(np.max(np.abs(a - b)))
    return gap / scale if scale > 0 else gap
