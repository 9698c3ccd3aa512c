"""The report union, its JSON and CSV encodings, and the run summary."""

import csv
import io
from collections import defaultdict
from collections.abc import Iterable
from dataclasses import dataclass, field
from typing import Annotated, Self

from pydantic import Field, TypeAdapter

from apps.padic.reports import DworkReport, GammaIdentityReport, GammaReport, PFactorRecord, PReport
from apps.statements.reports import QReport

Report = Annotated[
    QReport | PReport | DworkReport | GammaReport | GammaIdentityReport,
    Field(discriminator="kind"),
]

report_adapter: TypeAdapter[Report] = TypeAdapter(Report)
reports_adapter: TypeAdapter[list[Report]] = TypeAdapter(list[Report])

CSV_COLUMNS = ("kind", "id", "status", "params", "engine", "pass", "achieved", "ms", "notes")


def dump_json_lines(reports: Iterable[Report]) -> bytes:
    return b"".join(report_adapter.dump_json(report, by_alias=True) + b"\n" for report in reports)


def load_json_lines(data: bytes) -> list[Report]:
    return [report_adapter.validate_json(line) for line in data.splitlines() if line.strip()]


def dump_json_array(reports: list[Report]) -> bytes:
    return reports_adapter.dump_json(reports, by_alias=True, indent=2)


def _padic_valuation(factor: PFactorRecord) -> str:
    if factor.achieved_valuation is None:
        return "∞"
    return str(factor.achieved_valuation) if factor.exact else f"≥{factor.achieved_valuation}"


def _achieved(report: Report) -> str:
    match report:
        case QReport():
            return " ".join(f"Φ{f.index}:{'∞' if f.achieved is None else f.achieved}" for f in report.factors)
        case PReport():
            return " ".join(f"p^{f.target_exponent}:{_padic_valuation(f)}" for f in report.factors)
        case DworkReport():
            return "∞" if report.achieved is None else str(report.achieved)
        case _:
            return ""


def _row(report: Report) -> dict[str, object]:
    row: dict[str, object] = {"kind": report.kind, "ms": getattr(report, "ms", "")}
    match report:
        case QReport() | PReport():
            params = " ".join(f"{key}={value}" for key, value in report.params.items())
            row |= {"id": report.id, "status": report.status, "params": params, "pass": report.passed}
            row |= {"engine": getattr(report, "engine", ""), "notes": "; ".join(report.notes)}
        case DworkReport():
            row |= {"id": report.family, "params": f"p={report.p} r={report.r}", "pass": report.passed}
            row |= {"notes": "; ".join(report.notes)}
        case GammaIdentityReport():
            row |= {"id": "gamma-identities", "params": f"p={report.p} s={report.precision}", "pass": report.passed}
            row |= {"notes": "; ".join(report.failures)}
        case GammaReport():
            row |= {"id": "gamma", "params": f"p={report.p} x={report.x} s={report.precision}"}
    row["achieved"] = _achieved(report)
    return row


def summary_csv(reports: Iterable[Report]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=CSV_COLUMNS, restval="", lineterminator="\n")
    writer.writeheader()
    for report in reports:
        writer.writerow(_row(report))
    return buffer.getvalue()


def _verdicts(report: QReport) -> list[tuple[int, int, int | None, bool]]:
    return [(f.index, f.exponent, f.achieved, f.passed) for f in report.factors]


def engine_mismatches(reports: Iterable[Report]) -> list[str]:
    """Instances whose dense and local reports disagree on any per-factor verdict or valuation."""
    by_instance: dict[tuple[str, tuple[tuple[str, int], ...]], dict[str, QReport]] = defaultdict(dict)
    for report in reports:
        if isinstance(report, QReport):
            by_instance[report.id, tuple(report.params.items())][report.engine] = report
    mismatches = []
    for (statement_id, params), engines in by_instance.items():
        if len(engines) == 2 and _verdicts(engines["dense"]) != _verdicts(engines["local"]):
            mismatches.append(f"{statement_id} at {dict(params)}")
    return mismatches


@dataclass
class RunSummary:
    total: int = 0
    passed: int = 0
    failures: list[str] = field(default_factory=list)
    falsified: list[str] = field(default_factory=list)
    mismatches: list[str] = field(default_factory=list)
    skipped: int = 0

    @classmethod
    def of(cls, reports: list[Report], skipped: int = 0) -> Self:
        summary = cls(total=len(reports), skipped=skipped, mismatches=engine_mismatches(reports))
        for report in reports:
            if report.fails_run:
                summary.failures.append(_describe(report))
            elif isinstance(report, (QReport, PReport)) and not report.passed:
                summary.falsified.append(_describe(report))
            else:
                summary.passed += 1
        return summary

    @property
    def ok(self) -> bool:
        return not self.failures and not self.mismatches


def _describe(report: Report) -> str:
    match report:
        case PReport(error=str() as error):
            return f"{report.id} at {report.params}: undecided, {error}"
        case QReport() | PReport():
            return f"{report.id} at {report.params}"
        case DworkReport():
            return f"Dwork {report.family} at p={report.p}, r={report.r}"
        case GammaIdentityReport():
            return f"Γ_p identities at p={report.p}"
        case _:
            return report.kind
