from functools import cache
from typing import Any

from django.conf import settings
from django.core.exceptions import ImproperlyConfigured
from fsspec.implementations.local import LocalFileSystem
from fsspec.implementations.memory import MemoryFileSystem

from .base import StorageBackend
from .fsspec import FSSpecStorageBackend


def _base_path(options: dict[str, Any], backend: str) -> str:
    if not options.get("base_path"):
        raise ImproperlyConfigured(f"'base_path' is a required option for {backend} backends.")
    return options["base_path"]


def fsspec_local_backend_factory(**options: Any) -> FSSpecStorageBackend:
    """
    Reports on the local filesystem.

    Options:
        base_path: Reports root directory. This option is required.
    """
    return FSSpecStorageBackend(_base_path(options, "fsspec-local"), fs=LocalFileSystem())


def fsspec_memory_backend_factory(**options: Any) -> FSSpecStorageBackend:
    """
    Reports in fsspec's process-wide in-memory filesystem, for tests and dry runs.

    Options:
        base_path: Reports root inside the memory filesystem. This option is required.
    """
    return FSSpecStorageBackend(_base_path(options, "fsspec-memory"), fs=MemoryFileSystem())


_BACKEND_FACTORIES = {
    "fsspec-local": fsspec_local_backend_factory,
    "fsspec-memory": fsspec_memory_backend_factory,
}


def _storage_backend_factory(config: dict[str, Any]) -> StorageBackend:
    """
    Create a storage backend from a configuration dict with 'BACKEND_NAME' and optional 'OPTIONS' keys.

    Raises:
        ImproperlyConfigured: If BACKEND_NAME is missing or unsupported.
    """
    if "BACKEND_NAME" not in config:
        raise ImproperlyConfigured("'BACKEND_NAME' is a required option for storage configurations.")

    backend_type = config["BACKEND_NAME"]
    if backend_type not in _BACKEND_FACTORIES:
        supported = ", ".join(sorted(_BACKEND_FACTORIES))
        raise ImproperlyConfigured(
            f"Storage backend '{backend_type}' is not supported. Supported backends: {supported}"
        )
    return _BACKEND_FACTORIES[backend_type](**config.get("OPTIONS", {}))


@cache
def get_storage(name: str) -> StorageBackend:
    """
    Storage backend ``name`` from ``QDWORK_STORAGES``, cached after first access.

    Raises:
        ImproperlyConfigured: If QDWORK_STORAGES is not defined or name not found.
    """
    storages_config = getattr(settings, "QDWORK_STORAGES", None)
    if storages_config is None:
        raise ImproperlyConfigured("'QDWORK_STORAGES' setting is not configured.")
    if name not in storages_config:
        raise ImproperlyConfigured(f"Storage '{name}' is not configured.")
    return _storage_backend_factory(storages_config[name])


def get_report_storage() -> StorageBackend:
    return get_storage("reports")
