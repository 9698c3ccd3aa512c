from django.apps import AppConfig


class LocalringConfig(AppConfig):
    name = "apps.localring"
