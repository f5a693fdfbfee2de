"""Shared exception types."""


class GuardExceeded(ValueError):
    """An enumeration or construction would exceed its desk-scale guard.

    Guards are explicit parameters with documented defaults; they are never
    raised silently and callers may widen them deliberately.
    """
