import random
from collections.abc import Generator

import pytest
from fsspec.implementations.memory import MemoryFileSystem
from hypothesis import settings as hypothesis_settings

from project.core.storage import get_storage

hypothesis_settings.register_profile("qdwork", derandomize=True, deadline=None)
hypothesis_settings.load_profile("qdwork")


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=0, help="Seed for the randomized property suites")


@pytest.fixture
def rng(request) -> random.Random:
    return random.Random(request.config.getoption("--seed"))


@pytest.fixture
def report_storage(settings) -> Generator:
    """The ``reports`` storage on a fresh in-memory root."""
    get_storage.cache_clear()
    settings.QDWORK_STORAGES = {
        "reports": {"BACKEND_NAME": "fsspec-memory", "OPTIONS": {"base_path": "/reports"}},
    }
    yield get_storage("reports")
    get_storage.cache_clear()
    fs = MemoryFileSystem()
    fs.store.clear()
    fs.pseudo_dirs[:] = [""]
