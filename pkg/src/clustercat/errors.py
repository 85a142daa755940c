class ClusterCatError(Exception):
    """Base class for all errors raised by this package."""


class InputError(ClusterCatError, ValueError):
    """Malformed or out-of-domain input (bad vertex, non-Dynkin data, syntax)."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InvariantViolation(ClusterCatError, AssertionError):
    """An internal consistency check failed; indicates a bug, never bad input."""
