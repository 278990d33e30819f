"""Exception hierarchy shared by every module."""


class A1DegError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(A1DegError, ValueError):
    """An input violates a mathematical precondition."""


class NotPointed(DomainError):
    """deg f <= deg g, so the map does not fix infinity."""


class NotReduced(DomainError):
    """Numerator and denominator share a nonconstant factor."""


class UnsupportedPoint(DomainError):
    """A local degree was requested at a point that is not k-rational."""


class UnsupportedVanishingLocus(DomainError):
    """The numerator does not split into k-rational linear factors."""


class InternalError(A1DegError, RuntimeError):
    """An invariant that should be impossible to violate was violated."""
