"""Exception types shared across the package."""


class KdistError(Exception):
    """Base class for all package errors."""


class EdgeListParseError(KdistError, ValueError):
    """Malformed edge-list input; carries the 1-based line number."""

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class ContractViolationError(KdistError, ValueError):
    """A precondition of an operation was violated (bad vertex, bad permutation, ...)."""


class CapacityError(KdistError, ValueError):
    """Requested k exceeds the capacity the index was built with."""


class IndexFormatError(KdistError, ValueError):
    """A serialized index image is corrupt; the message names the offending field."""


class DegenerateInputError(KdistError, ValueError):
    """The evaluation protocol cannot run on this input (too few edges, no non-edges, ...)."""
