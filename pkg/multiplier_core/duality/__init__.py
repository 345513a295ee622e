"""
Duality between analytic functionals and germs on complements.
"""

from .germs import (
    CallableGerm,
    Germ,
    GermSide,
    PairedGerm,
    RationalFactor,
    SeparableGerm,
    TruncatedGerm,
    check_vanishing_at_infinity,
    hadamard_germ,
    random_rational_germ,
)
from .functional import (
    AnalyticFunctional,
    CarrierReport,
    act,
    carrier_bound_check,
    cauchy_transform,
    cauchy_transform_germ,
    moments,
)

__all__ = [
    'CallableGerm',
    'Germ',
    'GermSide',
    'PairedGerm',
    'RationalFactor',
    'SeparableGerm',
    'TruncatedGerm',
    'check_vanishing_at_infinity',
    'hadamard_germ',
    'random_rational_germ',
    'AnalyticFunctional',
    'CarrierReport',
    'act',
    'carrier_bound_check',
    'cauchy_transform',
    'cauchy_transform_germ',
    'moments',
]
