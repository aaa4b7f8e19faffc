"""Exception hierarchy shared by the library and the CLI."""


class SchubautError(Exception):
    """Base class for every error raised on purpose by this package."""


class InvalidInput(SchubautError, ValueError):
    """Malformed or out-of-range user input (bad type/rank, bad word, non-root)."""


class StructuralError(InvalidInput):
    """A subspace of g violates a closure precondition of the requested operation."""


class ResourceLimit(SchubautError):
    """An enumeration would exceed the configured element cap."""


class InvariantViolation(SchubautError, AssertionError):
    """An internal consistency check failed; this indicates a bug or a false theorem."""


class Refused(SchubautError):
    """The requested description is known not to hold for this input."""
