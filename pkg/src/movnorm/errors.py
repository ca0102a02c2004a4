"""Exception types raised across the package."""


class MovnormError(Exception):
    """Base class for all package errors."""


class DimensionMismatch(MovnormError):
    """Operands have incompatible shapes."""


class NegativeLambda(MovnormError):
    """A shift parameter was negative."""


class NotHermitian(MovnormError):
    """Matrix is not Hermitian within tolerance."""


class NotUnitary(MovnormError):
    """Matrix is not unitary within tolerance."""


class NotNonexpansive(MovnormError):
    """Matrix norm exceeds 1 beyond tolerance."""


class BadGrid(MovnormError):
    """Invalid sampling grid for a curve."""


class BadSpec(MovnormError):
    """Invalid ensemble specification."""


class ConvergenceError(MovnormError):
    """Iterative eigensolver failed to converge."""
