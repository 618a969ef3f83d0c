"""Exception types raised by netthermo."""


class ValidationError(ValueError):
    """An input violates a documented precondition."""


class CapExceededError(ValidationError):
    """Exact big-integer arithmetic was requested beyond the configured cap."""
