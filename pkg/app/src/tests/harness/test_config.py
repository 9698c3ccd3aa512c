import pytest

from apps.harness.config import load_sweep, parse_pairs
from apps.harness.exceptions import SweepConfigError
from apps.statements.base import QGrid


def test_defaults():
    config = load_sweep("")

    assert config.statements == ["all-proven"]
    assert config.engine == "local"
    assert config.k == [0, 1, 2, 3, 4, 5, 6]
    assert config.out == "sweep"


def test_lists_and_ranges():
    config = load_sweep(
        """
        # q side
        statements = Q-MAIN1, P-H2
        n = 3..5, 9
        r_max = 2
        engine = both   # both engines
        p = 5, 13
        dwork_families = H
        """
    )

    assert config.statements == ["Q-MAIN1", "P-H2"]
    assert config.n == [3, 4, 5, 9]
    assert config.engine == "both"
    assert config.p == [5, 13]
    assert config.dwork_families == ["H"]
    assert config.q_grid() == QGrid(n=(3, 4, 5, 9), r_max=2, d=(1, 2), m=(1, 2, 3), k=tuple(range(7)))
    assert config.p_grid().p == (5, 13)


def test_parse_pairs_strips_comments():
    assert parse_pairs("a = 1 # one\n\n  b=2,3\n# c = 4") == {"a": "1", "b": "2,3"}


@pytest.mark.parametrize(
    ("text", "message"),
    [
        ("n = 3\nn = 5", "line 2: duplicate key 'n'"),
        ("n 3", "line 1: expected 'key = value'"),
        ("= 3", "expected 'key = value'"),
        ("colour = blue", "colour: Extra inputs are not permitted"),
        ("statements = Q-NOPE", "Unknown statement: Q-NOPE"),
        ("dwork_families = XYZ", "Unknown summand family: XYZ"),
        ("engine = fast", "engine"),
        ("r_max = 0", "r_max"),
        ("jobs = 0", "jobs"),
        ("n = a..b", "n"),
    ],
)
def test_malformed(text, message):
    with pytest.raises(SweepConfigError, match=message) as exc_info:
        load_sweep(text, source="bad.sweep")

    assert exc_info.value.source == "bad.sweep"
    assert str(exc_info.value).startswith("malformed sweep config bad.sweep: ")
