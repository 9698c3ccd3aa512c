from django.core.management.base import BaseCommand, CommandError
from sympy import isprime

from apps.padic.dwork import DworkSeries, dwork_check
from apps.padic.exceptions import PadicError
from apps.summand.exceptions import UnknownFamilyError
from apps.summand.families import CLASSICAL_FAMILIES


class Command(BaseCommand):
    help = "Check the Dwork congruence f_{r+1}(z)/f_r(z^p) ≡ f_r(z)/f_{r−1}(z^p) (mod p^r) for a classical family."

    def add_arguments(self, parser):
        parser.add_argument("--family", type=str, required=True, help=f"One of {', '.join(CLASSICAL_FAMILIES)}")
        parser.add_argument("--p", type=int, required=True, help="Prime")
        parser.add_argument("--r", type=int, default=1, help="Level r ≥ 1 (default: 1)")
        parser.add_argument("--zdeg", type=int, default=None, help="Highest z-degree compared (default: p^{r+1}−1)")

    def handle(self, *args, **options):
        p, r = options["p"], options["r"]
        if not isprime(p):
            raise CommandError(f"{p} is not a prime", returncode=2)
        if r < 1:
            raise CommandError(f"r must be positive, got {r}", returncode=2)
        try:
            series = DworkSeries.named(options["family"])
            report = dwork_check(series, p, r, options["zdeg"])
        except (UnknownFamilyError, PadicError) as exc:
            raise CommandError(str(exc), returncode=2) from exc

        self.stdout.write(report.model_dump_json(by_alias=True))
        if not report.passed:
            raise CommandError(f"Dwork congruence fails for {report.family} at p={p}, r={r}", returncode=1)
        self.stdout.write(self.style.SUCCESS(f"{report.family}: congruent modulo {p}^{r} up to z^{report.zdeg}"))
