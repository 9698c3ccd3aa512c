from django.core.management.base import BaseCommand

from apps.harness.lookup import catalog


class Command(BaseCommand):
    help = "List every statement as: id | status | constraint | modulus | label"

    def add_arguments(self, parser):
        parser.add_argument("--status", choices=("PROVEN", "CONJECTURE"), default=None, help="Only this status")

    def handle(self, *args, **options):
        statements = [s for s in catalog() if options["status"] in (None, s.status)]
        for s in statements:
            self.stdout.write(f"{s.id} | {s.status} | {s.constraint} | {s.modulus_text} | {s.label}")
        self.stdout.write(self.style.SUCCESS(f"{len(statements)} statements"))
