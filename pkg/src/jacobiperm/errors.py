"""Shared exception types."""


class GuardError(RuntimeError):
    """Raised when an enumeration exceeds its desk-scale size guard."""
