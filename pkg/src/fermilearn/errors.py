"""Exception types shared across the package."""


class FermilearnError(Exception):
    """Base class for all package-specific errors."""


class ValidationError(FermilearnError, ValueError):
    """A matrix or state failed a structural check (Hermiticity, unitarity,
    column orthonormality, projector property, ...)."""


class CapacityError(FermilearnError):
    """An exhaustive computation would exceed the configured outcome budget."""


class DegeneracyError(FermilearnError):
    """A conditional probability left its numerically admissible band."""


class OracleContractError(FermilearnError):
    """A measurement oracle returned counts violating its contract."""
