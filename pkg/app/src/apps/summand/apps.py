from django.apps import AppConfig


class SummandConfig(AppConfig):
    name = "apps.summand"
