"""Exception hierarchy shared by the package."""


class SeifertError(Exception):
    """Base class for every error raised by this package."""


class InvalidInvariantsError(SeifertError, ValueError):
    """Seifert invariants that violate a validity rule."""


class PreconditionError(SeifertError, ValueError):
    """An operation was called outside its domain."""


class PresentationError(SeifertError, ValueError):
    """Malformed words, presentations or homomorphisms."""


class InternalConsistencyError(SeifertError, RuntimeError):
    """A condition that the constraint solver guarantees failed to hold.

    Seeing this means there is a bug, not bad input.
    """


class CapacityError(SeifertError, ValueError):
    """Input too large for the desk-scale limits."""
