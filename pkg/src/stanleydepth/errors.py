"""Exception types shared across the package."""


class StanleyDepthError(Exception):
    """Base class for all package-specific errors."""


class AmbientMismatchError(StanleyDepthError, ValueError):
    """Values with different ambient variable counts were combined."""


class LatticeLimitError(StanleyDepthError, ValueError):
    """A subset-lattice enumeration would exceed the configured size guard.

    This is a resource guard, not a mathematical error; raise the limit
    (``max_n`` argument or ``STANLEY_MAX_N``) to proceed anyway.
    """


class NotASubidealError(StanleyDepthError, ValueError):
    """The claimed inclusion I <= J between monomial ideals does not hold."""


class OracleCapError(StanleyDepthError, ValueError):
    """A brute-force oracle was asked to handle an instance above its cap."""


class BudgetExhaustedError(StanleyDepthError):
    """A search ran out of wall-clock budget before deciding.

    Deliberately distinct from returning "no partition": callers must treat
    this as "unknown", never as a negative answer.
    """


class ParseError(StanleyDepthError, ValueError):
    """A text input (ideal file, graph file, witness) failed to parse."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
