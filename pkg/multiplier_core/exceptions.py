"""
Engine exceptions

Defines the exceptions raised by the series, geometry, quadrature, duality,
multiplier and seminorm modules. Callers catch MultiplierError for all of them.
"""


class MultiplierError(Exception):
    """Base engine exception"""
    pass


class DimensionMismatchError(MultiplierError):
    """Raised when two objects live in different ambient dimensions."""
    pass


class NonFiniteCoefficientError(MultiplierError):
    """Raised when a series or sequence is built with NaN/Inf entries."""
    pass


class BoxError(MultiplierError):
    """Raised when a multi-index lies outside a truncation box, or a box is malformed."""
    pass


class HyperplaneError(MultiplierError):
    """Raised when an operation needs z outside the coordinate hyperplanes.

    Coordinatewise inversion and the contour formulas are undefined when some
    coordinate of z vanishes; use the hyperplane evaluation path instead.
    """
    pass


class UnsupportedGeometryError(MultiplierError):
    """Raised for planar factors or compact pieces outside the supported family."""
    pass


class ContourPlacementError(MultiplierError):
    """Raised when no admissible contour exists, or the integrand blows up on the nodes."""
    pass


class NodeCountError(MultiplierError):
    """Raised when a node count cannot resolve the requested coefficient window."""
    pass


class RegionError(MultiplierError):
    """Raised when a point lies inside or on the contour of a functional."""
    pass


class NonRungeDomainError(MultiplierError):
    """Raised when a multiplier is requested on a product with annulus factors."""
    pass


class DomainMembershipError(MultiplierError):
    """Raised when a point required to lie in the domain does not."""
    pass


class CarrierMembershipError(MultiplierError):
    """Raised when a kernel is not holomorphic off z^{-1}Ω for some sampled z."""
    pass


class DomainMismatchError(MultiplierError):
    """Raised when two multipliers acting on different domains are combined."""
    pass
