class PadicError(Exception):
    """Base class for p-adic arithmetic errors."""


class NotPadicIntegerError(PadicError):
    """Raised when a rational with p in its denominator is used as a p-adic integer."""

    def __init__(self, value: object, p: int):
        self.value = value
        self.p = p
        super().__init__(f"not a p-adic integer: {value} has {p} in its denominator")


class UnsupportedPrimeError(PadicError):
    """Raised when an operation is asked for a prime it does not handle."""

    def __init__(self, p: int, operation: str):
        self.p = p
        self.operation = operation
        super().__init__(f"{operation} is unsupported for p = {p}")


class PadicPrecisionError(PadicError):
    """Raised when a value would be known to less than one p-adic digit."""

    def __init__(self, p: int, precision: int):
        self.p = p
        self.precision = precision
        super().__init__(f"p-adic precision must be positive, got {precision} for p = {p}")


class GammaPrecisionCapError(PadicError):
    """Raised when a gating target needs Γ_p beyond the configured modulus cap."""

    def __init__(self, p: int, needed: int, cap: int):
        self.p = p
        self.needed = needed
        self.cap = cap
        super().__init__(f"Γ_p precision {p}^{needed} is beyond the configured cap {p}^{cap}")
