"""Exception hierarchy shared across the package."""


class MSLabError(Exception):
    """Base class for all errors raised by mslab."""


class DomainError(MSLabError, ValueError):
    """An argument lies outside the domain of the operation."""


class CapacityError(DomainError):
    """The instance exceeds the supported enumeration capacity."""


class ValidationError(MSLabError, ValueError):
    """Input data does not describe a valid object (e.g. negative total weight)."""


class HypothesisError(DomainError):
    """A weight function does not satisfy the hypothesis of a certificate."""


class ConstructionError(MSLabError, RuntimeError):
    """A constructive search exhausted without producing the requested object."""


class InvariantViolation(MSLabError, AssertionError):
    """An internal invariant failed; indicates a bug rather than bad input."""
