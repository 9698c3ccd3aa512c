class HarnessError(Exception):
    """Base class for sweep and command-line errors."""


class SweepConfigError(HarnessError):
    """Raised when a sweep configuration is malformed or plans no work."""

    def __init__(self, source: str, reason: str):
        self.source = source
        self.reason = reason
        super().__init__(f"malformed sweep config {source}: {reason}")
