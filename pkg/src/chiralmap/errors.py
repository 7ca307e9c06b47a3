"""Exception types raised across the package."""


class ChiralMapError(Exception):
    """Base class for every error raised by :mod:`chiralmap`."""


class OutOfRange(ChiralMapError, ValueError):
    pass


class RepeatedPoint(ChiralMapError, ValueError):
    pass


class DegreeMismatch(ChiralMapError, ValueError):
    pass


class DegreeTooLarge(ChiralMapError):
    pass


class NotTransitive(ChiralMapError):
    pass


class BadParams(ChiralMapError, ValueError):
    pass


class NotHyperbolic(ChiralMapError, ValueError):
    pass


class NotInTable(ChiralMapError, KeyError):
    pass


class PlanUnsupported(ChiralMapError):
    pass


class SearchTooLarge(ChiralMapError):
    pass


class GroupTooLarge(ChiralMapError):
    pass


class DivisibilityViolation(ChiralMapError):
    """A map record could not be formed because |G| is not divisible as required."""


class Cancelled(ChiralMapError):
    """A long search was stopped through its cancellation token."""
