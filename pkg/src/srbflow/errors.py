"""Exceptions shared across the library."""


class DomainError(ValueError):
    """A density left the admissible region (0, 1), so the state no longer
    corresponds to an expanding map; raised instead of clamping."""


class StepError(RuntimeError):
    """An integrator produced a non-finite value."""
