"""Exception hierarchy shared by every nlstop module."""

from __future__ import annotations


class NlstopError(Exception):
    """Base exception for all nlstop failures."""


class InvalidArgumentError(NlstopError, ValueError):
    """An argument violates a documented precondition."""


class GainSpecError(InvalidArgumentError):
    """A gain specification is malformed or describes an inadmissible gain."""


class UnsupportedOperationError(NlstopError):
    """The requested operation is not defined for the given risk mapping."""


class DerivativeUnavailableError(UnsupportedOperationError):
    """A derivative was requested where none exists (e.g. the worst-case mapping)."""


class AssumptionViolationError(NlstopError):
    """The solver produced a component that does not dominate the gain.

    Raised when the standing assumptions of the smooth-fit algorithm do not
    hold for the inputs.
    """


class NoRootError(NlstopError):
    """A bracketing root search found no sign change on its interval."""


class ExtensionError(NlstopError):
    """The extension procedure finished with parameters outside the admissible family."""


class HorizonExhaustedWarning(UserWarning):
    """More than 1% of the simulated paths were stopped by the time cap."""


class OutputPathError(NlstopError):
    """An output file could not be written or an input file could not be read."""
