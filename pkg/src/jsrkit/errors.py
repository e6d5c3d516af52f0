"""Package exceptions.

Separate classes rather than bare ValueError so the CLI can map input
problems to a distinct exit code without guessing at message contents.
"""


class JsrkitError(Exception):
    """Base class for all package errors."""


class InputError(JsrkitError):
    """Raised when user-supplied data is malformed or out of contract.

    Covers malformed JSON payloads, shape mismatches, out-of-range
    parameters and rejected norm candidates.
    """


class BudgetError(InputError):
    """Raised when an enumeration would exceed the configured word budget."""


class ConvergenceError(JsrkitError):
    """Raised when an iterative kernel fails to converge."""
