"""Exception hierarchy shared by the whole package."""


class HamiltonError(Exception):
    """Base class for domain errors (CLI exit status 1)."""


class FieldMismatchError(HamiltonError):
    pass


class ParamsMismatchError(HamiltonError):
    pass


class NotAUnitError(HamiltonError):
    pass


class PreconditionError(HamiltonError):
    """An operation was called outside its documented domain."""


class UnsupportedError(HamiltonError):
    """The request is well formed but outside what the kernel implements."""


class BudgetExceededError(HamiltonError):
    pass


class NotAnAutomorphismError(HamiltonError):
    pass


class InternalError(HamiltonError):
    """A self-check failed; indicates a bug rather than bad input."""
