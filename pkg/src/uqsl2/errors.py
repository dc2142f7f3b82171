"""Exception hierarchy shared by the kernel and the CLI."""


class UqError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(UqError, ValueError):
    """Operands built for different root-of-unity orders were combined."""


class RangeError(UqError, ValueError):
    """An index (E/F degree, module size, ...) is outside its allowed range."""


class DomainError(UqError, ValueError):
    """An operation was used outside its domain of definition."""


class ConsistencyError(UqError, RuntimeError):
    """An internal cross-check failed; this indicates a bug, not bad input."""


class ParseError(UqError, ValueError):
    """Malformed expression source; carries the 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column
