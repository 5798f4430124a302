"""Error types shared across the package."""


class EngelDimError(Exception):
    """Base class for every error raised by this package."""


class DomainError(EngelDimError, ValueError):
    """Input outside the mathematical domain of an operation."""


class InvalidWordError(EngelDimError, ValueError):
    """Digit word is inadmissible or not in the expected level set."""


class ConditionError(EngelDimError):
    """A window condition on the bounding sequences fails at some level."""

    def __init__(self, condition: int, index: int, message: str):
        super().__init__(message)
        self.condition = condition
        self.index = index


class EvaluationError(EngelDimError):
    """A sequence family could not produce a requested term."""


class SizeLimitError(EngelDimError):
    """A level holds more intervals than the caller allowed."""

    def __init__(self, count: int, limit: int, message: str):
        super().__init__(message)
        self.count = count
        self.limit = limit


class InternalError(EngelDimError):
    """An arithmetic invariant broke; indicates a bug, not bad input."""


class UsageError(EngelDimError):
    """Bad command line or config file input."""
