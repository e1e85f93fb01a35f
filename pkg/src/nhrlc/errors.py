"""Exception types shared across the toolkit."""


class NotPositiveHermitian(ValueError):
    """Operand is not a positive Hermitian matrix (square roots, metrics)."""


class ExceptionalPointError(ValueError):
    """Operation is undefined at an exceptional point (coalescent spectrum)."""


class NotExceptionalError(ValueError):
    """Exceptional-point analysis requested away from the coalescence locus."""


class ExistenceViolation(ExceptionalPointError):
    """The ladder-pair existence condition (a - b) * gamma = 1 fails.

    Subclasses :class:`ExceptionalPointError` because the circuit
    identification violates the condition exactly when the two mode
    directions coalesce (a = b).
    """


class PhaseUnsupported(ValueError):
    """Requested evolution method does not apply in the current phase."""


class GridMismatch(ValueError):
    """Trajectories sampled on different time grids cannot be compared."""
