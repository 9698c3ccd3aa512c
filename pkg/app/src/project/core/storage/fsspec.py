from posixpath import dirname, join, normpath, relpath

from fsspec.spec import AbstractFileSystem

from .base import StorageBackend
from .exceptions import InvalidKeyError, KeyNotFoundError


class FSSpecStorageBackend(StorageBackend):
    """
    Report storage on any fsspec filesystem, rooted at ``base_path``.

    Args:
        base_path: Reports root inside the filesystem.
        fs: The fsspec filesystem, ``LocalFileSystem`` in production and ``MemoryFileSystem`` in tests.
    """

    def __init__(self, base_path: str, fs: AbstractFileSystem) -> None:
        self._fs = fs
        self._base_path = base_path.rstrip("/") or base_path

    def store(self, key: str, data: bytes) -> None:
        path = self.resolve_key(key)
        if parent := dirname(path):
            self._fs.makedirs(parent, exist_ok=True)
        self._fs.pipe_file(path, data)

    def read(self, key: str) -> bytes:
        if not self.exists(key):
            raise KeyNotFoundError(key)
        return self._fs.cat_file(self.resolve_key(key))

    def delete(self, key: str) -> None:
        if self.exists(key):
            self._fs.rm(self.resolve_key(key))

    def exists(self, key: str) -> bool:
        path = self.resolve_key(key)
        return self._fs.exists(path) and self._fs.isfile(path)

    def keys(self, prefix: str = "") -> list[str]:
        if not self._fs.exists(self._base_path):
            return []
        found = (relpath(path, self._base_path) for path in self._fs.find(self._base_path))
        return sorted(key for key in found if key.startswith(prefix.lstrip("/")))

    def resolve_key(self, key: str) -> str:
        key = super().resolve_key(key)
        if {".", ".."} & set(key.split("/")):
            raise InvalidKeyError(key, "path contains relative path components")
        path = normpath(join(self._base_path, key))
        if not path.startswith(self._base_path + "/"):
            raise InvalidKeyError(key, "path escapes the reports root")
        return path
