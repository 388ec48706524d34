"""Exception types shared across the package."""


class HypothesisError(ValueError):
    """A construction was called on an input that does not meet its hypotheses."""


class VerificationError(RuntimeError):
    """A computed certificate failed independent re-verification.

    Constructions only raise this when something is wrong with the
    implementation (or a theorem has been contradicted), never for bad input.
    """


class CapExceededError(ValueError):
    """An input is larger than an enumeration cap."""
