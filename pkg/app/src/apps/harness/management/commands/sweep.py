"""Run a sweep config over the process pool.

Writes ``<out>.json`` (every report) and ``<out>.csv`` (one summary row per report) to the report storage.
Falsified conjectures are listed prominently but never change the exit status; a failing PROVEN instance or
an engine disagreement exits 1, a malformed or empty config exits 2. A p-side instance that cannot be
evaluated is recorded as an undecided report and the sweep carries on.
"""

from pathlib import Path

import structlog
from django.core.management.base import BaseCommand, CommandError

from apps.harness.config import load_sweep
from apps.harness.exceptions import SweepConfigError
from apps.harness.pool import run_tasks
from apps.harness.reports import RunSummary, dump_json_array, summary_csv
from apps.harness.tasks import plan
from apps.localring.exceptions import LocalizationError
from apps.padic.exceptions import PadicError
from apps.statements.exceptions import StatementError
from project.core.storage import get_report_storage

logger = structlog.get_logger()


class Command(BaseCommand):
    help = "Verify every instance of a sweep config in parallel and write JSON and CSV reports."

    def add_arguments(self, parser):
        parser.add_argument("config", type=str, help="Path of a key = value sweep config")
        parser.add_argument("--jobs", type=int, default=None, help="Worker processes (default: config, then cores)")
        parser.add_argument("--out", type=str, default=None, help="Report key prefix (default: config 'out')")
        parser.add_argument("--seed", type=int, default=0, help="Seed for the randomized Γ_p identity samples")

    def handle(self, *args, **options):
        path = Path(options["config"])
        try:
            config = load_sweep(path.read_text(), source=str(path))
            tasks = plan(config, seed=options["seed"], source=str(path))
        except OSError as exc:
            raise CommandError(f"cannot read sweep config: {exc}", returncode=2) from exc
        except SweepConfigError as exc:
            raise CommandError(str(exc), returncode=2) from exc

        logger.info("Sweep started", config=str(path), tasks=len(tasks))
        try:
            outcomes = run_tasks(tasks, options["jobs"] or config.jobs)
        except (StatementError, LocalizationError, PadicError) as exc:
            raise CommandError(f"sweep aborted: {exc}", returncode=1) from exc

        reports = [report for report in outcomes if report is not None]
        summary = RunSummary.of(reports, skipped=len(outcomes) - len(reports))
        out = options["out"] or config.out
        storage = get_report_storage()
        storage.store(f"{out}.json", dump_json_array(reports))
        storage.store_text(f"{out}.csv", summary_csv(reports))
        logger.info(
            "Sweep finished",
            reports=summary.total,
            failures=len(summary.failures),
            falsified=len(summary.falsified),
            mismatches=len(summary.mismatches),
        )

        self.stdout.write(
            f"summary=total:{summary.total} pass:{summary.passed} fail:{len(summary.failures)} "
            f"falsified:{len(summary.falsified)} skipped:{summary.skipped} mismatches:{len(summary.mismatches)}"
        )
        for item in summary.falsified:
            self.stdout.write(self.style.WARNING(f"CONJECTURE FALSIFIED: {item}"))
        for item in summary.mismatches:
            self.stdout.write(self.style.ERROR(f"ENGINE MISMATCH: {item}"))
        for item in summary.failures:
            self.stdout.write(self.style.ERROR(f"FAILED: {item}"))
        self.stdout.write(f"reports: {out}.json, {out}.csv")

        if not summary.ok:
            raise CommandError(f"{len(summary.failures) + len(summary.mismatches)} gating problems", returncode=1)
        self.stdout.write(self.style.SUCCESS("All gating instances pass."))
