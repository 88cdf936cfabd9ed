from django.apps import AppConfig


class StabilizerConfig(AppConfig):
    name = 'apps.stabilizer'
    verbose_name = 'Stabilizer'
