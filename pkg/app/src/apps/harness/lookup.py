"""One id namespace over the q-statement and supercongruence catalogs."""

from apps.padic import registry as p_registry
from apps.padic.base import SuperStatement
from apps.statements import registry as q_registry
from apps.statements.base import CongruenceStatement
from apps.statements.exceptions import UnknownStatementError

SELECTORS = ("all", "all-proven", "all-conjecture")

type Statement = CongruenceStatement | SuperStatement


def find(statement_id: str) -> Statement:
    """The q-statement or supercongruence with this id."""
    try:
        return q_registry.get_statement(statement_id)
    except UnknownStatementError:
        return p_registry.get_statement(statement_id)


def resolve(selectors: list[str]) -> tuple[list[CongruenceStatement], list[SuperStatement]]:
    """Statements named by ids or the ``all*`` selectors, deduplicated in first-mention order."""
    q_side: dict[str, CongruenceStatement] = {}
    p_side: dict[str, SuperStatement] = {}
    for selector in selectors:
        if selector in SELECTORS:
            q_side.update((s.id, s) for s in q_registry.select(selector))
            p_side.update((s.id, s) for s in p_registry.select(selector))
            continue
        statement = find(selector)
        if isinstance(statement, CongruenceStatement):
            q_side.setdefault(statement.id, statement)
        else:
            p_side.setdefault(statement.id, statement)
    return list(q_side.values()), list(p_side.values())


def catalog() -> list[Statement]:
    return [*q_registry.get_registry(), *p_registry.get_registry()]
