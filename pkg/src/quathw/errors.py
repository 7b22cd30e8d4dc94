"""Exception hierarchy shared by all quathw modules."""


class QuathwError(Exception):
    """Base class for every error raised by this package."""


class ZeroQuaternionError(QuathwError):
    """The zero quaternion has no inverse."""


class ShapeMismatchError(QuathwError):
    """Operands have incompatible shapes."""


class LengthMismatchError(QuathwError):
    """Two sequences that must have equal length do not."""


class NonFiniteError(QuathwError):
    """Input contains NaN or infinite entries."""


class NoConvergenceError(QuathwError):
    """An iterative eigensolver failed to converge."""


class NotHermitianError(QuathwError):
    """Input violates the Hermitian precondition."""


class SingularMatrixError(QuathwError):
    """Matrix is numerically singular."""


class SingularLeadingCoefficientError(SingularMatrixError):
    """Leading polynomial coefficient is not invertible."""


class PairingFailureError(QuathwError):
    """Eigenvalues could not be matched into conjugate pairs within tolerance."""


class NotDiagonalizableError(QuathwError):
    """Matrix has an eigenvalue with deficient geometric multiplicity."""


class NotNormalError(QuathwError):
    """Input violates the normality precondition."""


class MalformedPairingError(QuathwError):
    """Conjugate-fold input does not carry each target value exactly twice."""


class PreconditionViolatedError(QuathwError):
    """A structural hypothesis required by a check does not hold."""


class NotLinearError(PreconditionViolatedError):
    """Operation requires a degree-1 polynomial."""


class MatrixFileError(QuathwError):
    """A matrix or polynomial file could not be parsed."""
