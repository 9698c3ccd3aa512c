class StorageError(Exception):
    """Base class for report storage errors."""


class KeyNotFoundError(StorageError):
    """Raised when reading a report key that was never stored."""

    def __init__(self, key: str):
        self.key = key
        super().__init__(f"Report not found: {key}")


class InvalidKeyError(StorageError):
    """Raised when a report key is empty, malformed or escapes the reports root."""

    def __init__(self, key: str, reason: str):
        self.key = key
        self.reason = reason
        super().__init__(f"Invalid report key '{key}': {reason}")
