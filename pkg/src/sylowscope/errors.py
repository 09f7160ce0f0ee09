"""Exception types shared across the package."""


class SylowscopeError(Exception):
    """Base class for all package errors."""


class CapExceededError(SylowscopeError):
    """An explicit computation was refused because a configured cap was exceeded."""


class NotASubgroupError(SylowscopeError, ValueError):
    pass


class NotNormalError(SylowscopeError, ValueError):
    pass


class NoApplicableModeError(SylowscopeError):
    """No rigorous algorithm is available for the requested predicate."""


class InvariantViolation(SylowscopeError, AssertionError):
    """A report failed its internal consistency checks."""
