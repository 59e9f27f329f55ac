class ValidationError(ValueError):
    """Input violates a documented precondition (shape, Hermiticity, finiteness...)."""


class DegenerateStateError(ValidationError):
    """The requested superposition cancels to (numerically) the zero vector."""
