"""
Composition of multipliers

M₁∘M₂ has sequence a_α b_α. When both factors carry Laurent kernels the composite
keeps one too, the Hadamard product of the kernels, so the contour formulas stay
available for it.
"""
from __future__ import annotations

from utils import logger

from ..duality import hadamard_germ
from ..exceptions import DomainMismatchError
from .multiplier import Multiplier, Provenance, ProvenanceKind


def compose(first: Multiplier, second: Multiplier, nodes: int | None = None) -> Multiplier:
    """first ∘ second on the intersection of the two boxes."""
    if first.domain != second.domain:
        raise DomainMismatchError(f"Cannot compose multipliers on {first.domain} and {second.domain}")
    box = first.box.intersect(second.box)
    sequence = first.sequence_on(box) * second.sequence_on(box)
    left, right = first.laurent_kernel(), second.laurent_kernel()
    if left is None or right is None:
        return Multiplier(first.domain, sequence)
    kernel = hadamard_germ(left, right, nodes)
    logger.debug(f"Composite kernel {type(kernel).__name__} on box {box.degree_bounds}")
    return Multiplier(first.domain, sequence, Provenance(ProvenanceKind.LAURENT_GERM, kernel))
