"""Exception types shared across the package."""

from __future__ import annotations


class ZigzagError(Exception):
    """Base class for package-specific errors."""


class ModelSpecError(ZigzagError, ValueError):
    """A model description (constructor arguments or JSON document) is invalid."""


class DomainError(ZigzagError, ValueError):
    """An argument lies outside the mathematical domain of a formula."""


class InfeasibleError(ZigzagError):
    """A requested certificate cannot exist.

    ``violations`` lists the names of the violated inequalities so callers can
    report exactly which constraint failed.
    """

    def __init__(self, message: str, violations: tuple[str, ...] | list[str] = ()):
        super().__init__(message)
        self.violations = list(violations)


class JumpCapError(ZigzagError, RuntimeError):
    """A trajectory exceeded its jump budget.

    This guards against misconfigured rates that explode: the simulator gives
    up instead of looping forever, and reports where it stopped.
    """

    def __init__(self, message: str, n_jumps: int, time: float):
        super().__init__(message)
        self.n_jumps = n_jumps
        self.time = time
