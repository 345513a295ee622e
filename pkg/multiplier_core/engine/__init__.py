"""
Multipliers on products of discs: construction, the isomorphisms with
functionals and germs, application and composition.
"""

from .multiplier import (
    Multiplier,
    Provenance,
    ProvenanceKind,
    check_carrier_membership,
)
from .isomorphisms import (
    functional_from_multiplier,
    laurent_germ,
    multiplier_from_functional,
    sequence_distance,
    taylor_germ,
)
from .application import (
    EigenReport,
    HyperplaneMean,
    apply_laurent,
    apply_sequence,
    apply_taylor,
    eigencheck,
    evaluate_at,
    laurent_contour,
    monomial_response,
    placed_contour,
)
from .algebra import compose

__all__ = [
    'Multiplier',
    'Provenance',
    'ProvenanceKind',
    'check_carrier_membership',
    'functional_from_multiplier',
    'laurent_germ',
    'multiplier_from_functional',
    'sequence_distance',
    'taylor_germ',
    'EigenReport',
    'HyperplaneMean',
    'apply_laurent',
    'apply_sequence',
    'apply_taylor',
    'eigencheck',
    'evaluate_at',
    'laurent_contour',
    'monomial_response',
    'placed_contour',
    'compose',
]
