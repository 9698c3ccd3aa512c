class SummandError(Exception):
    """Base class for summand family errors."""


class InvalidSummandSpecError(SummandError):
    """Raised when a summand description cannot be evaluated term by term."""

    def __init__(self, name: str, reason: str):
        self.name = name
        self.reason = reason
        super().__init__(f"Invalid summand family {name!r}: {reason}")


class UnknownFamilyError(SummandError, KeyError):
    """Raised when a family id is not in the catalog."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"Unknown summand family: {name}")

    def __str__(self) -> str:
        return self.args[0]
