"""Exception types shared across the package."""


class CapabilityError(Exception):
    """The request is well-formed but exceeds a supported size or budget."""


class InvariantViolation(RuntimeError):
    """An internal mathematical invariant failed; the message carries a counterexample."""
