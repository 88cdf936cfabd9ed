from django.apps import AppConfig


class RenderingConfig(AppConfig):
    name = 'apps.rendering'
    verbose_name = 'Rendering'
