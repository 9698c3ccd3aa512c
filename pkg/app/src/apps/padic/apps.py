from django.apps import AppConfig


class PadicConfig(AppConfig):
    name = "apps.padic"

    def ready(self):
        # Import the catalog to register every supercongruence
        import apps.padic.catalog  # noqa: F401
