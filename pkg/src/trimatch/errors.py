"""Shared exception types."""


class StructureError(Exception):
    """A structural assumption of the counting pipeline was violated.

    Raised when a graph handed to the block/decay machinery does not have
    the properties of an intersection graph of a valid instance (e.g. a
    residual neighborhood of size 5, a non-simplicial seed block, or a
    disconnected graph where a connected one is required).
    """


class ParseError(ValueError):
    """Malformed hypergraph text input; carries a 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
