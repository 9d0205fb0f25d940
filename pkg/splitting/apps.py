"""
Splitting App Configuration.
"""
from django.apps import AppConfig


class SplittingConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'splitting'
    verbose_name = 'Splitting - Decomposições Adaptadas e Fatias'
