import pytest

from project.core.storage.base import StorageBackend
from project.core.storage.exceptions import InvalidKeyError


class ImplementedStorageBackend(StorageBackend):
    def __init__(self) -> None:
        self.stored: dict[str, bytes] = {}

    def store(self, key: str, data: bytes) -> None:
        self.stored[self.resolve_key(key)] = data

    def read(self, key: str) -> bytes:
        return self.stored[self.resolve_key(key)]

    def delete(self, key: str) -> None:
        self.stored.pop(self.resolve_key(key), None)

    def exists(self, key: str) -> bool:
        return self.resolve_key(key) in self.stored

    def keys(self, prefix: str = "") -> list[str]:
        return sorted(key for key in self.stored if key.startswith(prefix))


@pytest.fixture
def storage() -> ImplementedStorageBackend:
    return ImplementedStorageBackend()


@pytest.mark.parametrize(
    ("key", "expected"),
    [
        ("sweep.json", "sweep.json"),
        ("desk/sweep.csv", "desk/sweep.csv"),
        ("/sweep.json", "sweep.json"),  # leading slash stripped
        ("//sweep.json", "sweep.json"),
        ("runs/2026/10/q-main1.jsonl", "runs/2026/10/q-main1.jsonl"),
        (".hidden", ".hidden"),
        ("a-b_c.d", "a-b_c.d"),
    ],
)
def test_valid_keys(storage, key, expected):
    assert storage.resolve_key(key) == expected


@pytest.mark.parametrize(
    "key",
    [
        "",
        "/",
        "///",
        "desk/",
        "desk sweep.json",
        "sweep$.json",
    ],
)
def test_invalid_keys(storage, key):
    with pytest.raises(InvalidKeyError):
        storage.resolve_key(key)


def test_store_text_encodes(storage):
    storage.store_text("summary.csv", "kind,id\nq,Q-MAIN1\n")

    assert storage.read("summary.csv") == b"kind,id\nq,Q-MAIN1\n"
