"""Exception types shared across the package."""


class CirctwError(Exception):
    """Base class for all errors raised by circtw."""


class TooLarge(CirctwError):
    """Input exceeds the size cap of a brute-force routine."""


class TooSmall(CirctwError):
    """Input is below the size a routine requires."""


class KMismatch(CirctwError):
    """Two rooted objects disagree on k."""


class BudgetExhausted(CirctwError):
    """A configured state, retry or time budget ran out."""


class InvalidPrecoloring(CirctwError):
    """A precoloring names a missing vertex or a color outside 0..p-1."""


class NotBipartite(CirctwError):
    """An operation that needs a bipartite graph got an odd cycle."""


class PreconditionFailed(CirctwError):
    """Inputs violate a documented precondition."""


class NoStep(CirctwError):
    """The gadget table has no entry that can replace the cut-off part."""


class LemmaViolation(CirctwError):
    """A check that must hold by a proven statement failed.

    ``dump`` carries enough of the instance to reproduce it.
    """

    def __init__(self, message, dump=None):
        super().__init__(message)
        self.dump = dump


class NonEquivalenceCloseness(LemmaViolation):
    """The closeness relation on roots failed to be transitive."""


class ParseError(CirctwError):
    """Malformed graph text; ``line`` is 1-based."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
