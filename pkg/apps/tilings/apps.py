from django.apps import AppConfig


class TilingsConfig(AppConfig):
    name = 'apps.tilings'
    verbose_name = 'Tilings'
