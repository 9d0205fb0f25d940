"""
Gtubes App Configuration.
"""
from django.apps import AppConfig


class GtubesConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'gtubes'
    verbose_name = 'G-Tubos - Tubos Simples e Restritos'
