"""
Verification App Configuration.
"""
from django.apps import AppConfig


class VerificationConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'verification'
    verbose_name = 'Verificação - Diferenças Finitas e Relatórios'
