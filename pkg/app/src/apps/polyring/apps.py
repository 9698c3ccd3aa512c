from django.apps import AppConfig


class PolyringConfig(AppConfig):
    name = "apps.polyring"
