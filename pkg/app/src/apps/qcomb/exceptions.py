class CombinatoricsError(Exception):
    """Base class for q-combinatorics errors."""


class DigitsOutOfRangeError(CombinatoricsError):
    """Raised when a q-Lucas digit is not below the base."""

    def __init__(self, digits: dict[str, int], base: int):
        self.digits = digits
        self.base = base
        listing = ", ".join(f"{name}={value}" for name, value in digits.items())
        super().__init__(f"digits out of range: {listing} must be at most {base - 1}")


class InvalidFactorSpecError(CombinatoricsError):
    """Raised when a Pochhammer factor description is not well formed."""

    def __init__(self, spec: object, reason: str):
        self.spec = spec
        self.reason = reason
        super().__init__(f"Invalid factor spec {spec!r}: {reason}")
