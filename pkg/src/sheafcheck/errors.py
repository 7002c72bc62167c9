"""Exception hierarchy.

Input errors (exit code 2 at the command line) derive from
:class:`InputError`; everything raised while analysing a well-formed problem
derives from :class:`AnalysisError` (exit code 1).
"""


class SheafcheckError(Exception):
    """Base class for all errors raised by this package."""


class InputError(SheafcheckError, ValueError):
    """Malformed problem data. ``path`` points at the offending field, if known."""

    def __init__(self, message, path=None):
        self.path = path
        if path:
            message = f"{path}: {message}"
        super().__init__(message)


class MalformedInputError(InputError):
    """A network, section or assignment violates its structural invariants."""


class AnalysisError(SheafcheckError):
    pass


class DomainError(AnalysisError, ValueError):
    """An argument lies outside the domain of an operation (unknown vertex, non-cell, ...)."""


class RestrictionDomainError(DomainError):
    """Restriction to variables that the section does not define."""


class GluingConflictError(AnalysisError):
    """Two sections disagree on a shared variable."""

    def __init__(self, variable, values):
        self.variable = variable
        self.values = tuple(values)
        shown = ", ".join(repr(v) for v in self.values)
        super().__init__(f"sections disagree on variable {variable!r}: {shown}")


class ConsistencyTypeError(AnalysisError, TypeError):
    """A consistency structure received values it cannot compare."""


class BudgetExceededError(AnalysisError):
    """Cell enumeration would exceed the configured budget."""


class OracleLimitError(AnalysisError):
    """The exhaustive oracle was asked to handle too many vertices."""
