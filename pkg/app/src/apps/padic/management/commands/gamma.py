import time
from fractions import Fraction

from django.core.management.base import BaseCommand, CommandError
from sympy import isprime

from apps.padic.exceptions import PadicError
from apps.padic.gamma import gamma_identities_check, gamma_p
from apps.padic.reports import GammaReport


class Command(BaseCommand):
    help = "Evaluate Morita's p-adic Gamma function at a rational point, or self-check its identities."

    def add_arguments(self, parser):
        parser.add_argument("--p", type=int, required=True, help="Odd prime")
        parser.add_argument("--x", type=str, default="1/4", help="Rational point a/b with p ∤ b (default: 1/4)")
        parser.add_argument("--precision", type=int, default=2, help="Modulus exponent s of p^s (default: 2)")
        parser.add_argument(
            "--identities",
            action="store_true",
            help="Check the functional equation, reflection, linearity and stability instead",
        )
        parser.add_argument("--seed", type=int, default=0, help="Seed for the sampled reflection points")

    def handle(self, *args, **options):
        p, precision = options["p"], options["precision"]
        if not isprime(p):
            raise CommandError(f"{p} is not a prime", returncode=2)
        if precision < 1:
            raise CommandError(f"precision must be positive, got {precision}", returncode=2)
        try:
            if options["identities"]:
                identities = gamma_identities_check(p, precision, seed=options["seed"])
                self.stdout.write(identities.model_dump_json(by_alias=True))
                if not identities.passed:
                    raise CommandError(f"{len(identities.failures)} Γ_p identity checks failed", returncode=1)
                return
            x = Fraction(options["x"])
            started = time.perf_counter()
            value = gamma_p(x, p, precision)
        except (ValueError, ZeroDivisionError) as exc:
            raise CommandError(f"invalid point {options['x']!r}: {exc}", returncode=2) from exc
        except PadicError as exc:
            raise CommandError(str(exc), returncode=2) from exc

        report = GammaReport(
            p=p,
            x=str(x),
            precision=precision,
            value=value.residue(),
            ms=round((time.perf_counter() - started) * 1000, 3),
        )
        self.stdout.write(report.model_dump_json(by_alias=True))
