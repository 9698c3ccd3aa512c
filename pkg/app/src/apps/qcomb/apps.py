from django.apps import AppConfig


class QcombConfig(AppConfig):
    name = "apps.qcomb"
