import csv
import io
import json

import pytest

from apps.harness.reports import (
    CSV_COLUMNS,
    RunSummary,
    dump_json_array,
    dump_json_lines,
    engine_mismatches,
    load_json_lines,
    summary_csv,
)
from apps.padic.reports import DworkReport, GammaIdentityReport, GammaReport, PFactorRecord, PReport
from apps.statements.reports import FactorRecord, QReport


def _q(engine="local", achieved=2, status="PROVEN", exponent=2):
    factor = FactorRecord.judge(5, exponent, achieved)
    return QReport(
        id="Q-MAIN1",
        status=status,
        params={"n": 5, "r": 1, "d": 1},
        engine=engine,
        factors=[factor],
        passed=factor.passed,
        ms=1.5,
    )


def _p(achieved=2, status="PROVEN"):
    factor = PFactorRecord.judge(5, 2, achieved)
    return PReport(id="P-RV", status=status, params={"p": 5, "r": 1}, factors=[factor], passed=factor.passed, ms=0.5)


def _dwork(passed=True):
    return DworkReport(family="H", p=3, r=1, zdeg=8, achieved=None, guard=True, passed=passed, ms=0.1)


@pytest.fixture
def mixed_reports():
    return [
        _q(),
        _p(),
        _dwork(),
        GammaReport(p=5, x="1/4", precision=2, value=6, ms=0.1),
        GammaIdentityReport(p=5, precision=2, checks={"functional": 25}, failures=[], passed=True),
    ]


def test_json_lines_keep_report_kinds(mixed_reports):
    data = dump_json_lines(mixed_reports)

    assert data.count(b"\n") == 5
    assert [json.loads(line)["kind"] for line in data.splitlines()] == ["q", "p", "dwork", "gamma", "gamma-identities"]
    assert load_json_lines(data) == mixed_reports


def test_json_uses_field_aliases():
    record = json.loads(dump_json_lines([_q()]))

    assert record["pass"] is True
    assert record["factors"] == [{"N": 5, "e": 2, "achieved": 2, "pass": True, "exact": True}]


def test_json_array(mixed_reports):
    assert [r["kind"] for r in json.loads(dump_json_array(mixed_reports))] == [
        "q",
        "p",
        "dwork",
        "gamma",
        "gamma-identities",
    ]


def test_summary_csv(mixed_reports):
    rows = list(csv.DictReader(io.StringIO(summary_csv(mixed_reports))))

    assert tuple(rows[0]) == CSV_COLUMNS
    assert rows[0] | {"ms": ""} == {
        "kind": "q",
        "id": "Q-MAIN1",
        "status": "PROVEN",
        "params": "n=5 r=1 d=1",
        "engine": "local",
        "pass": "True",
        "achieved": "Φ5:2",
        "ms": "",
        "notes": "",
    }
    assert rows[1]["achieved"] == "p^2:2"
    assert rows[2]["id"] == "H"
    assert rows[2]["achieved"] == "∞"
    assert rows[3]["params"] == "p=5 x=1/4 s=2"
    assert rows[4]["id"] == "gamma-identities"


# ── summary ──


def test_engine_mismatches():
    assert engine_mismatches([_q("dense"), _q("local")]) == []
    assert engine_mismatches([_q("dense"), _q("local", achieved=3)]) == ["Q-MAIN1 at {'n': 5, 'r': 1, 'd': 1}"]
    assert engine_mismatches([_q("local", achieved=3)]) == []


def test_run_summary_sorts_verdicts():
    reports = [
        _q(),
        _q(status="CONJECTURE", achieved=1),
        _p(achieved=1),
        _dwork(passed=False),
    ]

    summary = RunSummary.of(reports, skipped=2)

    assert summary.total == 4
    assert summary.passed == 1
    assert summary.skipped == 2
    assert summary.falsified == ["Q-MAIN1 at {'n': 5, 'r': 1, 'd': 1}"]
    assert summary.failures == ["P-RV at {'p': 5, 'r': 1}", "Dwork H at p=3, r=1"]
    assert not summary.ok


def test_falsified_conjecture_keeps_run_ok():
    summary = RunSummary.of([_q(status="CONJECTURE", achieved=0), _p()])

    assert summary.ok
    assert len(summary.falsified) == 1


def test_mismatch_fails_run():
    assert not RunSummary.of([_q("dense"), _q("local", achieved=None)]).ok
