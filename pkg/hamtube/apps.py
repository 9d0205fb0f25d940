"""
Hamtube App Configuration.
"""
from django.apps import AppConfig


class HamtubeConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'hamtube'
    verbose_name = 'Hamtube - Tubos Hamiltonianos em Fibrados Cotangentes'
