"""Exception hierarchy shared across the package."""


class LietypeError(Exception):
    """Base class for all package errors."""


class UsageError(LietypeError):
    """Malformed request: bad parameters, unknown names, out-of-domain input."""


class DomainError(LietypeError):
    """Structurally valid input outside the supported mathematical domain."""


class ResourceError(LietypeError):
    """Work refused because the requested object is too large to enumerate."""


class ConsistencyError(LietypeError):
    """An internal cross-check failed; indicates a bug, not bad input."""


class NumericalError(LietypeError):
    """Floating-point machinery failed to separate or stabilize after retries."""
