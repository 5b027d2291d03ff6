"""Exception types shared across the package and mapped to HTTP errors by the service."""


class BraggPairError(Exception):
    """Base class for physics-level errors raised by this package."""


class PauliForbiddenError(BraggPairError):
    """Raised for two-fermion preparations excluded by the Pauli principle.

    The antisymmetrized state of two fermions prepared in identical
    single-particle states has zero norm, so no detection probabilities
    exist for it.
    """


class DegenerateStateError(BraggPairError):
    """Raised when the postselected-state normalization denominator vanishes.

    Below the 1e-12 threshold the squared normalization constant is
    numerically meaningless and no table can be returned.
    """


class UnsupportedConfigurationError(BraggPairError):
    """Raised for inputs outside the model's domain (e.g. unequal perpendicular spreads)."""


class IllConditionedError(BraggPairError):
    """Raised when the overlap estimator is evaluated where its inversion blows up."""


class InconsistentMeasurementError(BraggPairError):
    """Raised when a measured probability implies an overlap far outside [0, 1]."""
