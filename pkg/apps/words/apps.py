from django.apps import AppConfig


class WordsConfig(AppConfig):
    name = 'apps.words'
    verbose_name = 'Words'
