class LocalizationError(Exception):
    """Base class for errors in the localized (Φ-adic) arithmetic."""


class NonUnitInversionError(LocalizationError, ZeroDivisionError):
    """Raised when a residue divisible by Φ_N is inverted."""

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"non-unit inversion: residue is divisible by Φ_{index}")


class PrecisionExhaustedError(LocalizationError):
    """Raised when cancellation leaves less precision than a caller needs."""

    def __init__(self, index: int, available: int, required: int):
        self.index = index
        self.available = available
        self.required = required
        super().__init__(f"precision exhausted at Φ_{index}: known modulo Φ_{index}^{available}, need {required}")


class IndexMismatchError(LocalizationError):
    """Raised when values localized at different cyclotomic indices are combined."""

    def __init__(self, left: int, right: int):
        self.left = left
        self.right = right
        super().__init__(f"cannot combine values localized at Φ_{left} and Φ_{right}")
