from django.apps import AppConfig


class FlagGraphConfig(AppConfig):
    name = 'apps.flag_graph'
    verbose_name = 'Flag graph'
