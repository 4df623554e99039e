"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Bad input: domain violation, malformed data, failed precondition."""


class IndexSumViolation(ValidationError):
    """Prescribed eigenstructure data does not satisfy the Index Sum identity."""

    def __init__(self, residual: int, message: str | None = None):
        self.residual = residual
        super().__init__(message or f"index sum violated: residual {residual:+d}")


class InvariantBreach(RuntimeError):
    """An internal consistency check failed. Always a bug, never repaired."""


class ConstructionFailed(RuntimeError):
    """A randomized construction exhausted its attempt budget."""
