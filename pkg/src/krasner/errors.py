"""Exception hierarchy shared across the package."""


class KrasnerError(Exception):
    """Base class for all domain errors."""


class TableError(KrasnerError):
    """Malformed table data: missing entries, out-of-range ids, empty values."""


class ArityError(KrasnerError):
    """Operation applied with the wrong number of arguments."""


class UnknownElementError(KrasnerError):
    """Reference to an element outside the carrier."""


class PreconditionError(KrasnerError):
    """Violated operation precondition (e.g. Q meets S, improper ideal)."""


class CapExceededError(KrasnerError):
    """Carrier size exceeds the configured working cap."""


class ReconstructionError(KrasnerError):
    """The fraction construction failed an internal consistency check."""


class AxiomViolationError(KrasnerError):
    """A structure required to satisfy the hyperring axioms does not."""


class ParseError(KrasnerError):
    """Positioned syntax or resolution error in a structure document."""

    def __init__(self, line: int, col: int, message: str):
        super().__init__(f"{line}:{col}: {message}")
        self.line = line
        self.col = col
        self.reason = message
