from apps.padic.base import SuperStatement
from apps.statements.base import Status
from apps.statements.exceptions import UnknownStatementError

_registry: dict[str, SuperStatement] = {}


def register(cls: type[SuperStatement]) -> type[SuperStatement]:
    """Class decorator that adds a supercongruence to the catalog."""
    if cls.id in _registry:
        raise ValueError(f"duplicate statement id {cls.id}")
    _registry[cls.id] = cls()
    return cls


def get_registry() -> list[SuperStatement]:
    return list(_registry.values())


def get_statement(statement_id: str) -> SuperStatement:
    try:
        return _registry[statement_id]
    except KeyError:
        raise UnknownStatementError(statement_id) from None


def select(selector: str) -> list[SuperStatement]:
    """Supercongruences named by ``all``, ``all-proven``, ``all-conjecture`` or a single id."""
    match selector:
        case "all":
            return get_registry()
        case "all-proven":
            return [s for s in _registry.values() if s.status is Status.PROVEN]
        case "all-conjecture":
            return [s for s in _registry.values() if s.status is Status.CONJECTURE]
        case _:
            return [get_statement(selector)]
