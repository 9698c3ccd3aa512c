import re
from abc import ABC, abstractmethod

from .exceptions import InvalidKeyError

_KEY_PATTERN = re.compile(r"^[a-zA-Z0-9._/-]+$")


class StorageBackend(ABC):
    """
    Where runs leave their artifacts: JSON lines from ``verify --out``, the JSON array and CSV summary of a
    sweep. Keys are slash-separated relative paths; every operation is a whole-object write or read.
    """

    @abstractmethod
    def store(self, key: str, data: bytes) -> None:
        """Write ``data`` at ``key``, replacing any previous report."""

    @abstractmethod
    def read(self, key: str) -> bytes:
        """
        Return the bytes stored at ``key``.

        Raises:
            KeyNotFoundError: If nothing is stored at the key.
        """

    @abstractmethod
    def delete(self, key: str) -> None:
        """Remove the report at ``key``; a missing key is not an error."""

    @abstractmethod
    def exists(self, key: str) -> bool: ...

    @abstractmethod
    def keys(self, prefix: str = "") -> list[str]:
        """Stored keys under ``prefix``, sorted."""

    def store_text(self, key: str, text: str) -> None:
        self.store(key, text.encode())

    def resolve_key(self, key: str) -> str:
        """
        Normalize a key, dropping leading slashes.

        Raises:
            InvalidKeyError: If the key is empty, ends with a slash or uses characters outside ``[A-Za-z0-9._/-]``.
        """
        key = key.lstrip("/")
        if key == "":
            raise InvalidKeyError(key, "key cannot be empty")
        if key.endswith("/"):
            raise InvalidKeyError(key, "key cannot end with a slash")
        if not _KEY_PATTERN.match(key):
            raise InvalidKeyError(key, "key contains invalid characters")
        return key
