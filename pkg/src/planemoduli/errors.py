"""Exception hierarchy shared by all modules.

Everything user-facing derives from PlaneModuliError so the command-line
front end can map any library failure to a single exit code.
"""


class PlaneModuliError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(PlaneModuliError, ValueError):
    """An argument is outside the domain of the requested operation."""


class ExactDivisionError(DomainError):
    """A polynomial division that must be exact left a remainder."""


class NoWallError(DomainError):
    """The two classes span no semicircular wall (degenerate denominator)."""


class EmptyWallError(DomainError):
    """The wall formula gives a non-positive squared radius."""


class AmbiguousChamberError(DomainError):
    """The top point of a wall lies exactly on a reference wall."""


class ConventionError(PlaneModuliError):
    """A computation violated a pinned sign or integrality convention.

    Raised instead of silently repairing the value: a nonnegative Euler
    characteristic where a negative one is required, or a Harder-Narasimhan
    sum that fails to collapse to a polynomial with nonnegative integer
    coefficients.
    """
