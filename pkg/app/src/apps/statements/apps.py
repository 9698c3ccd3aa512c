from django.apps import AppConfig


class StatementsConfig(AppConfig):
    name = "apps.statements"

    def ready(self):
        # Import the catalog to register every q-statement
        import apps.statements.catalog  # noqa: F401
