"""Exception types shared across the package."""


class ModlatError(Exception):
    """Base class for all package errors."""


class ValidationError(ModlatError):
    """An operation table or map violates a structural axiom."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class CapExceeded(ModlatError):
    """A size cap was hit; operations refuse rather than degrade."""

    def __init__(self, what, limit, needed=None):
        self.what = what
        self.limit = limit
        self.needed = needed
        detail = f"{what} cap {limit} exceeded"
        if needed is not None:
            detail += f" (needed {needed})"
        super().__init__(detail)


class PreconditionError(ModlatError):
    """Input fails a documented precondition of the operation."""


class InternalCheckError(ModlatError):
    """Independent computation routes disagreed; this signals a bug, not bad data."""


class InputError(ModlatError):
    """Malformed ring, module, or corpus description."""
