"""Exception hierarchy shared by all colorline modules."""


class ColorlineError(Exception):
    """Base class for all library errors."""


class GraphArgumentError(ColorlineError, ValueError):
    """Raised when a caller violates an operation precondition."""


class CapabilityError(ColorlineError):
    """Raised when an input exceeds a documented size or budget cap."""


class BudgetExceededError(CapabilityError):
    """Raised when a configured wall-clock budget runs out mid-search."""


class ParseError(ColorlineError, ValueError):
    """Raised on malformed input text; carries a 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InternalContradictionError(ColorlineError):
    """A verified precondition led to an impossible state; signals a bug."""
