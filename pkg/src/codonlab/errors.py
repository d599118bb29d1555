"""Exception types shared across the package."""


class CodonLabError(Exception):
    """Base class for every error raised by this package."""


class InvalidParamsError(CodonLabError, ValueError):
    """An argument lies outside the documented domain."""


class UnknownLetterError(InvalidParamsError):
    """A word contains a letter that is not part of the expected alphabet."""


class CapacityExceededError(CodonLabError):
    """An enumeration or simulation would exceed the configured cap."""


class TableFormatError(CodonLabError, ValueError):
    """A translation-table file violates the expected format.

    `line` and `column` are 1-based positions when they are known; `column`
    points into the raw line, not into the field value.
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None and column is not None:
            message = f"line {line}, column {column}: {message}"
        elif line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
