"""Exception hierarchy shared by the whole library.

The CLI maps these onto exit codes: InputError -> 2, PreconditionError
(including StructuralError) -> 3.
"""


class NillatError(Exception):
    """Base class for all library errors."""


class InputError(NillatError):
    """Malformed input: bad indices, dimension mismatch, unparsable JSON."""


class PreconditionError(NillatError):
    """Input is well-formed but violates an operation's precondition."""


class StructuralError(PreconditionError):
    """Input fails a structural hypothesis (wrong algebra type, rank defect)."""
