"""Exception types raised by the library."""


class NcGaussError(Exception):
    """Base class for all ncgauss errors."""


class DomainError(NcGaussError):
    """Parameter outside its admissible range (theta*eta >= 1, R >= 1, ...)."""


class ShapeError(NcGaussError):
    """Dimension mismatch or unsupported mode layout."""


class KindError(NcGaussError):
    """Structure matrix of the wrong kind passed to an operation."""


class SingularMapError(NcGaussError):
    """A linear map that must be invertible is numerically singular."""


class SingularStructure(NcGaussError):
    """Structure matrix is not invertible."""


class NotPositiveDefinite(NcGaussError):
    """Covariance matrix failed the positive-definiteness check."""


class PairingError(NcGaussError):
    """Eigenvalues of the spectral problem did not come in clean +/- pairs."""


class NumericalError(NcGaussError):
    """A closed-form radicand fell outside its tolerance band."""
