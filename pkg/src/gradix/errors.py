"""Exception hierarchy.

Two kinds of failure matter at the boundary: a structure that fails one of
its defining laws (ValidationError, carrying the name of the violated
invariant), and input that cannot even be parsed into a structure
(FormatError). Everything else is a plain GradixError.
"""


class GradixError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(GradixError):
    """A structure violates one of its defining invariants.

    ``invariant`` is a short stable name for the violated law, e.g.
    ``"group.associativity"`` or ``"signature.r_unique"``.  CLI error
    messages are built from it, and tests match on it.
    """

    def __init__(self, invariant, message):
        super().__init__(f"{invariant}: {message}")
        self.invariant = invariant


class FormatError(GradixError):
    """Input could not be parsed: malformed JSON, missing keys, bad refs."""
