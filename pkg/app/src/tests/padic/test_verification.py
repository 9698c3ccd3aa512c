from fractions import Fraction

import pytest
from pydantic import ValidationError

from apps.padic.base import PGrid, PParams, rising, truncated
from apps.padic.exceptions import GammaPrecisionCapError
from apps.padic.registry import get_registry, get_statement, select
from apps.padic.reports import PFactorRecord, PReport
from apps.padic.verification import gamma_precision_cap, theorem12_check, verify_super
from apps.statements.exceptions import ParameterConstraintError, UnknownStatementError

PRIMES_TO_13 = (3, 5, 7, 11, 13)

ACCEPTANCE = (
    [("P-H2", PParams(p=p)) for p in (3, 5, 7, 11, 13, 17)]
    + [("P-RV", PParams(p=p)) for p in PRIMES_TO_13]
    + [("P-J2", PParams(p=p)) for p in (5, 7, 11, 13)]
    + [("P-J3", PParams(p=p, r=r)) for p, r in ((5, 1), (5, 2), (7, 1), (11, 1), (13, 1))]
    + [("P-H3a", PParams(p=p, r=r)) for p, r in ((5, 1), (5, 2), (13, 1))]
    + [("P-H3b", PParams(p=7, r=2))]
    + [("P-SUN55", PParams(p=p, r=r)) for p in (3, 5, 7) for r in (1, 2)]
    + [("P-SUN66", PParams(p=p, r=r)) for p in (2, 3, 5, 7) for r in (1, 2)]
    + [("P-H2LIU", PParams(p=p, m=m)) for p in PRIMES_TO_13 for m in (1, 2, 3)]
    + [("P-DIS1", PParams(p=p, r=r)) for p, r in ((5, 1), (5, 2), (13, 1))]
    + [("P-DIS2", PParams(p=p, r=r)) for p, r in ((5, 1), (5, 2), (13, 1))]
    + [("P-T51C", PParams(p=p, r=r, d=d)) for p in (3, 5, 7) for r in (1, 2) for d in (1, 2)]
    + [("P-T52C", PParams(p=p, r=r, d=d)) for p in (5, 13) for r in (1,) for d in (1, 2)]
    + [("P-T52C", PParams(p=5, r=2, d=d)) for d in (1, 2)]
)


def test_catalog_size():
    assert len(get_registry()) == 14
    assert len(select("all-proven")) == 14
    assert select("all-conjecture") == []
    assert [s.id for s in select("P-RV")] == ["P-RV"]


def test_unknown_statement():
    with pytest.raises(UnknownStatementError):
        get_statement("P-NOPE")


def test_truncated_sums():
    assert truncated("H", 2) == Fraction(603, 512)
    assert truncated("RV", 2) == Fraction(89, 64)
    assert truncated("CB", -1) == 0
    assert rising(Fraction(3, 4), 2) == Fraction(21, 16)


# ── admissibility ──


def test_instances_respect_hypotheses():
    grid = PGrid(p=(2, 3, 5, 7, 13), r_max=2, d=(1, 2), m=(1, 2))

    assert [i.p for i in get_statement("P-H2").instances(grid)] == [3, 5, 7, 13]
    assert [(i.p, i.r) for i in get_statement("P-H3a").instances(grid)] == [(5, 1), (5, 2), (13, 1), (13, 2)]
    assert [(i.p, i.r) for i in get_statement("P-H3b").instances(grid)] == [(7, 2)]
    assert len(list(get_statement("P-SUN66").instances(grid))) == 10
    assert len(list(get_statement("P-T51C").instances(grid))) == 16


@pytest.mark.parametrize(
    ("statement_id", "params"),
    [
        ("P-T12", PParams(p=3)),
        ("P-H3a", PParams(p=7)),
        ("P-H3b", PParams(p=7, r=1)),
        ("P-J2", PParams(p=3)),
        ("P-RV", PParams(p=9)),
        ("P-T51C", PParams(p=5, d=3)),
    ],
)
def test_constraint_violations(statement_id, params):
    with pytest.raises(ParameterConstraintError):
        verify_super(get_statement(statement_id), params)


def test_truncation_cap(settings):
    settings.QDWORK_MAX_TRUNCATION = 100

    assert not get_statement("P-SUN55").admits(PParams(p=5, r=3))
    assert get_statement("P-SUN55").admits(PParams(p=5, r=2))


# ── verdicts ──


@pytest.mark.parametrize(("statement_id", "params"), ACCEPTANCE, ids=[f"{s}[{p}]" for s, p in ACCEPTANCE])
def test_proven_instances_pass(statement_id, params):
    report = verify_super(get_statement(statement_id), params)

    assert report.passed, report.model_dump_json(by_alias=True)


@pytest.mark.parametrize(("p", "r"), [(5, 1), (5, 2), (5, 3), (13, 1), (13, 2), (13, 3)])
def test_quarter_gamma_quotient(p, r):
    report = theorem12_check(p, r)

    assert report.passed
    assert report.factors[0].target_exponent == 2 * r


@pytest.mark.parametrize(
    ("statement_id", "params", "achieved"),
    [
        ("P-H2", PParams(p=3), 2),
        ("P-H2", PParams(p=7), 2),
        ("P-RV", PParams(p=5), 2),
        ("P-J2", PParams(p=5), 4),
        ("P-SUN55", PParams(p=3), 2),
        ("P-SUN66", PParams(p=2), 2),
    ],
)
def test_exact_valuations(statement_id, params, achieved):
    report = verify_super(get_statement(statement_id), params)

    assert report.factors[0].achieved_valuation == achieved
    assert report.factors[0].exact
    assert report.precision is None


def test_gamma_side_precision():
    report = theorem12_check(5, 1)

    assert report.precision == 4
    assert get_statement("P-T12").evaluate(PParams(p=5)).lhs == Fraction(7, 3)


def test_margin_override():
    assert verify_super(get_statement("P-H2"), PParams(p=5), margin=0).precision == 2


def test_informational_target_does_not_gate():
    report = verify_super(get_statement("P-J3"), PParams(p=5, r=1))

    gating, informational = report.factors
    assert not gating.informational and informational.informational
    assert informational.target_exponent == 4


def test_target_beyond_the_capped_precision_is_undetermined(settings):
    settings.QDWORK_GAMMA_MAX_MODULUS = 5**2

    report = verify_super(get_statement("P-DIS2"), PParams(p=5, r=1))

    gating, conjectured = report.factors
    assert report.passed
    assert report.precision == 2
    assert gating.passed is True
    assert conjectured.target_exponent == 3
    assert conjectured.achieved_valuation == 2
    assert not conjectured.exact
    assert conjectured.passed is None
    assert "p^3 is undetermined: the difference vanishes to the capped precision p^2" in report.notes
    assert report.model_dump(by_alias=True)["factors"][1]["pass"] is None


def test_target_within_the_working_precision_is_decided():
    report = verify_super(get_statement("P-DIS2"), PParams(p=5, r=1))

    assert report.precision == 5
    assert all(f.passed is not None for f in report.factors)


def test_gamma_cap(settings):
    settings.QDWORK_GAMMA_MAX_MODULUS = 5**2

    assert gamma_precision_cap(5) == 2
    assert gamma_precision_cap(7) == 1
    with pytest.raises(GammaPrecisionCapError, match=r"Γ_p precision 5\^4 is beyond the configured cap 5\^2"):
        theorem12_check(5, 2)


def test_default_gamma_cap():
    assert gamma_precision_cap(13) == 6
    assert gamma_precision_cap(5) == 9


# ── reports ──


def test_report_json_uses_pass_alias():
    data = theorem12_check(5, 1).model_dump(by_alias=True)

    assert data["kind"] == "p"
    assert data["pass"] is True
    assert data["factors"][0]["pass"] is True
    assert data["params"] == {"p": 5, "r": 1, "d": 1, "m": 1}


def test_report_overall_must_match_factors():
    failing = PFactorRecord.judge(5, 2, 1)

    assert not failing.passed
    with pytest.raises(ValidationError, match="conjunction"):
        PReport(id="P-RV", status="PROVEN", params={"p": 5}, factors=[failing], passed=True, ms=0.0)


def test_failing_proven_report_fails_run():
    report = PReport(
        id="P-RV", status="PROVEN", params={"p": 5}, factors=[PFactorRecord.judge(5, 2, 1)], passed=False, ms=0.0
    )

    assert report.fails_run
    assert not report.model_copy(update={"status": "CONJECTURE"}).fails_run


@pytest.mark.parametrize(
    ("achieved", "exact", "expected"),
    [
        (None, True, True),
        (6, False, True),
        (5, False, None),
        (5, True, False),
    ],
)
def test_factor_verdicts(achieved, exact, expected):
    assert PFactorRecord.judge(5, 6, achieved, exact=exact).passed is expected


def test_undetermined_informational_factor_does_not_gate():
    factors = [
        PFactorRecord.judge(5, 2, 2, exact=False),
        PFactorRecord.judge(5, 3, 2, exact=False, informational=True),
    ]

    report = PReport(id="P-DIS2", status="PROVEN", params={"p": 5}, factors=factors, passed=True, ms=0.0)

    assert not report.fails_run


def test_undecided_report_fails_run():
    error = "Γ_p precision 5^4 is beyond the configured cap 5^2"

    report = PReport.undecided("P-T12", "PROVEN", {"p": 5, "r": 2}, error)

    assert not report.passed
    assert report.fails_run
    assert report.error == error
    assert report.notes == [error]
    with pytest.raises(ValidationError, match="conjunction"):
        PReport.model_validate(report.model_dump() | {"passed": True})


# ── desk grid ──


DESK_GRID = PGrid(p=PRIMES_TO_13, r_max=3, d=(1, 2), m=(1, 2, 3))


@pytest.mark.desk
@pytest.mark.parametrize(
    ("statement", "params"),
    [
        pytest.param(statement, params, id=f"{statement.id}[{params}]")
        for statement in select("all-proven")
        for params in statement.instances(DESK_GRID)
    ],
)
def test_proven_statements_pass_on_desk_grid(statement, params):
    report = verify_super(statement, params)

    assert report.passed, report.model_dump_json(by_alias=True)
