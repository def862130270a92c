"""Shared exception types."""


class ParseError(ValueError):
    """Malformed textual input, with a 1-based line/column position."""

    def __init__(self, message: str, line: int = 1, column: int | None = None):
        self.line = line
        self.column = column
        where = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{where}: {message}")


class InternalCheckError(RuntimeError):
    """A self-verification that can never legitimately fail did fail."""
