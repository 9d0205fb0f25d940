"""
Specialfn App Configuration.
"""
from django.apps import AppConfig


class SpecialfnConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'specialfn'
    verbose_name = 'Funções Especiais - ℰ, ℱ e fator m₁'
