"""Exception types shared across the package."""


class RCMonoidError(Exception):
    """Base class for all errors raised by rcmonoid."""


class VerticalImage(RCMonoidError, ZeroDivisionError):
    """A unimodular map sends a slope to a vertical direction."""


class NotFinite(RCMonoidError, ValueError):
    pass


class IndexBeyondExpansion(RCMonoidError, IndexError):
    pass


class NonpositiveDenominator(RCMonoidError, ValueError):
    pass


class NotMember(RCMonoidError, ValueError):
    pass


class IrrationalAlpha(RCMonoidError, ValueError):
    pass


class InsufficientPrecision(RCMonoidError):
    """A truncated expansion is too short to certify the requested result."""


class DegenerateCone(RCMonoidError, ValueError):
    """The cone does not span the plane."""


class NotUnimodular(RCMonoidError, ValueError):
    pass


class NotStrictlyConvex(RCMonoidError, ValueError):
    """Raised by the brute-force oracle for half-planes and the full plane."""


class SpecError(RCMonoidError, ValueError):
    """Malformed number literal or cone specification."""
