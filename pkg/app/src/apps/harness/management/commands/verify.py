"""Verify one statement instance and stream its reports as JSON lines.

Exit status: 0 when every PROVEN instance passes (CONJECTURE verdicts never count), 1 on a failing or
undecidable PROVEN instance or when the two engines disagree, 2 on an unknown id, missing parameters or a
violated hypothesis.
"""

import structlog
from django.core.management.base import BaseCommand, CommandError

from apps.harness.lookup import find
from apps.harness.reports import Report, dump_json_lines, engine_mismatches
from apps.harness.tasks import ENGINES
from apps.localring.exceptions import LocalizationError
from apps.padic.base import PParams
from apps.padic.exceptions import PadicError
from apps.padic.verification import verify_super
from apps.statements.base import CongruenceStatement, QParams
from apps.statements.engines import verify_q
from apps.statements.exceptions import (
    DegreeBudgetExceededError,
    MalformedInstanceError,
    ParameterConstraintError,
    UnknownStatementError,
)
from project.core.storage import get_report_storage

logger = structlog.get_logger()


class Command(BaseCommand):
    help = "Verify a single q-statement or supercongruence instance."

    def add_arguments(self, parser):
        parser.add_argument("--statement", type=str, required=True, help="Catalog id, e.g. Q-MAIN1 or P-T12")
        for name in ("n", "p", "s", "k"):
            parser.add_argument(f"--{name}", type=int, default=None)
        for name in ("r", "d", "m"):
            parser.add_argument(f"--{name}", type=int, default=1)
        parser.add_argument(
            "--engine", choices=sorted(ENGINES), default="local", help="q-side engine (default: local)"
        )
        parser.add_argument("--budget", type=int, default=None, help="Dense degree budget override")
        parser.add_argument("--padding", type=int, default=None, help="Initial local padding override")
        parser.add_argument("--out", type=str, default=None, help="Report storage key for the JSON lines")

    def handle(self, *args, **options):
        try:
            statement = find(options["statement"])
        except UnknownStatementError as exc:
            raise CommandError(str(exc), returncode=2) from exc

        reports: list[Report]
        try:
            if isinstance(statement, CongruenceStatement):
                reports = self._verify_q(statement, options)
            else:
                if options["p"] is None:
                    raise CommandError(f"{statement.id} needs --p", returncode=2)
                params = PParams(p=options["p"], r=options["r"], d=options["d"], m=options["m"])
                reports = [verify_super(statement, params)]
        except (ParameterConstraintError, MalformedInstanceError) as exc:
            raise CommandError(str(exc), returncode=2) from exc
        except (LocalizationError, PadicError) as exc:
            raise CommandError(f"undecided: {exc}", returncode=1) from exc

        data = dump_json_lines(reports)
        self.stdout.write(data.decode(), ending="")
        if options["out"]:
            get_report_storage().store(options["out"], data)

        failures = [r for r in reports if r.fails_run]
        mismatches = engine_mismatches(reports)
        if mismatches:
            raise CommandError(f"dense and local engines disagree: {', '.join(mismatches)}", returncode=1)
        if failures:
            raise CommandError(f"{statement.id} fails: {len(failures)} failing report(s)", returncode=1)
        verdict = "passes" if all(getattr(r, "passed", True) for r in reports) else "recorded (conjecture fails)"
        self.stderr.write(self.style.SUCCESS(f"{statement.id} {verdict}"))

    def _verify_q(self, statement: CongruenceStatement, options: dict) -> list[Report]:
        if options["n"] is None:
            raise CommandError(f"{statement.id} needs --n", returncode=2)
        params = QParams(
            n=options["n"], r=options["r"], d=options["d"], m=options["m"], s=options["s"], k=options["k"]
        )
        reports: list[Report] = []
        for engine in ENGINES[options["engine"]]:
            try:
                reports.append(
                    verify_q(statement, params, engine, budget=options["budget"], padding=options["padding"])
                )
            except DegreeBudgetExceededError as exc:
                if options["engine"] != "both":
                    raise CommandError(str(exc), returncode=2) from exc
                logger.warning("Dense oracle skipped", statement=statement.id, error=str(exc))
        return reports
