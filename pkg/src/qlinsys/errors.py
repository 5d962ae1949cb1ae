"""Exception types shared across the package.

Everything user-triggerable derives from ValidationError so callers (and the
CLI) can distinguish bad input from a failed circuit search.
"""


class QlinsysError(Exception):
    """Base class for all package errors."""


class ValidationError(QlinsysError, ValueError):
    """An input failed a documented precondition."""


class NotOrthonormalError(ValidationError):
    """Matrix columns are not orthonormal within tolerance."""


class NotOrthogonalError(ValidationError):
    """Matrix is not orthogonal within tolerance."""


class NotNormalizedError(ValidationError):
    """Vector does not have unit Euclidean norm within tolerance."""


class DimensionMismatchError(ValidationError):
    """Operand shapes are incompatible."""


class InvalidTargetError(ValidationError):
    """Gate targets are out of range, repeated, or wrong in number."""


class NegativeProbabilityError(ValidationError):
    """A probability entry is negative."""


class InvalidProbabilityError(ValidationError):
    """A probability parameter lies outside [0, 1]."""


class InvalidCountsError(ValidationError):
    """Search-space size or marked-state count is out of range."""


class InvalidMarkedSetError(ValidationError):
    """Marked-state set is empty or references non-existent states."""


class UnsupportedGateError(ValidationError):
    """Circuit contains a gate with no OpenQASM 2.0 counterpart."""


class SynthesisNotFoundError(QlinsysError):
    """No circuit within the gate budget realizes the target."""
