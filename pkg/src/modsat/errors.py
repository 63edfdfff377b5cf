"""Shared exception types."""


class DimacsError(ValueError):
    """Raised on malformed DIMACS CNF input.

    Carries the 1-based line number where the problem was found, when known.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BudgetExceededError(RuntimeError):
    """Raised when an enumeration or search exceeds its configured budget."""


class UnsupportedFormulaError(ValueError):
    """Raised when a formula falls outside what an operation supports,
    for example mixed clause widths where a uniform width is required."""
