"""Exception types shared across the package."""


class PreconditionError(ValueError):
    """An input violates a documented precondition.

    ``witness`` carries the offending element or value in printable form.
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NotAGroebnerBasis(PreconditionError):
    """A basis failed S-pair certification."""


class VerificationError(RuntimeError):
    """A postcondition that should hold by construction did not."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness
