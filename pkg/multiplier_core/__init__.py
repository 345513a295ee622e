"""
Holomorphic Multipliers Core Package

This package provides the numerical engine for multipliers on products of discs:
truncated power series, planar geometry, contour quadrature, the duality between
analytic functionals and germs, the multiplier isomorphisms and the seminorms.
"""

from .series import Point, TaylorPoly, TruncationBox
from .domains import Annulus, ClosedDisc, CompactBox, Disc, ProductDomain
from .duality import AnalyticFunctional, SeparableGerm, TruncatedGerm
from .engine import (
    Multiplier,
    apply_laurent,
    apply_sequence,
    apply_taylor,
    compose,
    eigencheck,
    evaluate_at,
    functional_from_multiplier,
    multiplier_from_functional,
)
from .seminorms import DeltaSequence, germ_seminorm, uniform_germ_seminorm
from .exceptions import MultiplierError

__all__ = [
    "Point",
    "TaylorPoly",
    "TruncationBox",
    "Annulus",
    "ClosedDisc",
    "CompactBox",
    "Disc",
    "ProductDomain",
    "AnalyticFunctional",
    "SeparableGerm",
    "TruncatedGerm",
    "Multiplier",
    "apply_laurent",
    "apply_sequence",
    "apply_taylor",
    "compose",
    "eigencheck",
    "evaluate_at",
    "functional_from_multiplier",
    "multiplier_from_functional",
    "DeltaSequence",
    "germ_seminorm",
    "uniform_germ_seminorm",
    "MultiplierError",
]
