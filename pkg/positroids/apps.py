from django.apps import AppConfig


class PositroidsConfig(AppConfig):
    name = 'positroids'
    verbose_name = 'Positroids'
