import pytest

from apps.statements.base import QGrid, QParams, Status, integral
from apps.statements.exceptions import MalformedInstanceError, ParameterConstraintError, UnknownStatementError
from apps.statements.registry import get_registry, get_statement, register, select

CONJECTURES = {
    "C-61",
    "C-62",
    "C-63",
    "C-64",
    "C-65",
    "C-66",
    "C-67",
    "C-68",
    "C-MAIN1-STRONG",
    "C-MAIN3-STRONG",
}


def test_catalog_size():
    assert len(get_registry()) == 39
    assert len({s.id for s in get_registry()}) == 39


def test_select():
    assert {s.id for s in select("all-conjecture")} == CONJECTURES
    assert all(s.status is Status.PROVEN for s in select("all-proven"))
    assert len(select("all-proven")) + len(CONJECTURES) == len(select("all"))
    assert [s.id for s in select("Q-MAIN1")] == ["Q-MAIN1"]


def test_unknown_statement():
    with pytest.raises(UnknownStatementError, match="Unknown statement: Q-NOPE"):
        get_statement("Q-NOPE")


def test_duplicate_registration():
    existing = type(get_statement("Q-MAIN1"))

    with pytest.raises(ValueError, match="duplicate statement id Q-MAIN1"):
        register(existing)


@pytest.mark.parametrize(
    ("statement_id", "params", "admitted"),
    [
        ("Q-MAIN1", QParams(n=5, r=2, d=1), True),
        ("Q-MAIN1", QParams(n=6), False),
        ("Q-MAIN1", QParams(n=7), False),
        ("Q-MAIN1", QParams(n=5, d=3), False),
        ("Q-H2A", QParams(n=7), True),
        ("Q-H2A", QParams(n=1), False),
        ("Q-OLD1", QParams(n=3, m=2), True),
        ("Q-LEM23", QParams(n=5, r=3, s=2), True),
        ("Q-LEM23", QParams(n=5, r=2, s=2), False),
        ("Q-LEM23", QParams(n=5, r=2), False),
        ("Q-REASON", QParams(n=5), False),
        ("Q-REASON", QParams(n=5, k=0), True),
        ("Q-T53b", QParams(n=4, r=1, d=1), True),
        ("Q-T53b", QParams(n=4, r=1, d=2), False),
        ("Q-C65-M1", QParams(n=5, m=2), False),
        ("Q-LP", QParams(n=2), True),
    ],
)
def test_admits(statement_id, params, admitted):
    assert get_statement(statement_id).admits(params) is admitted


def test_constraint_error():
    with pytest.raises(ParameterConstraintError, match=r"Q-MAIN1 at n=6, r=1, d=1, m=1: requires n≡1 \(4\), n>1"):
        get_statement("Q-MAIN1").build(QParams(n=6))


def test_instances():
    grid = QGrid(n=(3, 5, 9), r_max=2)

    main = list(get_statement("Q-MAIN1").instances(grid))
    stability = list(get_statement("Q-LEM23").instances(QGrid(n=(5,), r_max=3)))

    assert len(main) == 8
    assert {p.n for p in main} == {5, 9}
    assert [(p.r, p.s) for p in stability] == [(2, 1), (3, 1), (3, 2)]


def test_instances_only_iterate_used_axes():
    instances = list(get_statement("Q-H2A").instances(QGrid(n=(3, 5), r_max=3)))

    assert instances == [QParams(n=3), QParams(n=5)]


def test_params_str_skips_unset():
    assert str(QParams(n=5, r=2)) == "n=5, r=2, d=1, m=1"
    assert QParams(n=5, k=3).as_dict() == {"n": 5, "r": 1, "d": 1, "m": 1, "k": 3}


def test_integral():
    assert integral("Q-X", 12, 4, "q-exponent") == 3
    with pytest.raises(MalformedInstanceError, match=r"q-exponent = 7/2 is not an integer"):
        integral("Q-X", 7, 2, "q-exponent")


@pytest.mark.parametrize("statement", get_registry(), ids=lambda s: s.id)
def test_catalog_metadata(statement):
    assert statement.label
    assert statement.constraint
    assert statement.modulus_text
    assert statement.status in (Status.PROVEN, Status.CONJECTURE)
    assert statement.id.startswith("C-") == (statement.status is Status.CONJECTURE)
