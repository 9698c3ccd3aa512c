class PolynomialError(Exception):
    """Base class for all polynomial arithmetic errors."""


class ZeroDivisorError(PolynomialError, ZeroDivisionError):
    """Raised when dividing by the zero polynomial."""

    def __init__(self, operation: str):
        self.operation = operation
        super().__init__(f"zero divisor in {operation}")


class NonMonicDivisorError(PolynomialError):
    """Raised when a division routine that needs a monic divisor gets another one."""

    def __init__(self, leading: int):
        self.leading = leading
        super().__init__(f"divisor must be monic, leading coefficient is {leading}")


class InexactDivisionError(PolynomialError):
    """Raised when an exact division leaves a remainder."""


class UndefinedIndexError(PolynomialError):
    """Raised when a cyclotomic index is not a positive integer."""

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"undefined index {index} for a cyclotomic polynomial")


class ZeroValuationError(PolynomialError):
    """Raised when asking for the valuation of the zero function."""

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"valuation of zero undefined (+∞) at Φ_{index}")


class InvalidModulusError(PolynomialError):
    """Raised when a cyclotomic modulus violates its invariants."""

    def __init__(self, factors: object, reason: str):
        self.factors = factors
        self.reason = reason
        super().__init__(f"Invalid modulus {factors!r}: {reason}")
