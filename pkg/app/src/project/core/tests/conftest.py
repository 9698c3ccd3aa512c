from collections.abc import Generator

import pytest
from fsspec.implementations.memory import MemoryFileSystem


@pytest.fixture
def memory_fs() -> Generator[MemoryFileSystem]:
    fs = MemoryFileSystem()
    yield fs
    fs.store.clear()
    fs.pseudo_dirs[:] = [""]
