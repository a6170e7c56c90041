"""Exception types shared across the package."""


class InputError(ValueError):
    """Raised when an operation receives structurally invalid input."""


class ParseError(InputError):
    """Raised on malformed documents; carries the JSON path of the offending token."""

    def __init__(self, path: str, message: str):
        self.path = path
        self.message = message
        super().__init__(f"{path}: {message}")


class InvalidAlgebraError(InputError):
    """Raised when a bracket table fails the Jacobi identity."""

    def __init__(self, violations):
        self.violations = violations
        first = violations[0] if violations else None
        super().__init__(f"Jacobi identity fails at {len(violations)} triple(s), first: {first}")


class NotAnIdealError(InputError):
    """Raised when a subspace passed as an ideal is not one; carries a witness bracket."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"subspace is not an ideal, witness bracket escapes: {witness}")
