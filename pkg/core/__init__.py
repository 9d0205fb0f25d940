"""
Core App - Funcionalidades centrais do sistema.

Contém:
- Exceção base do domínio (DomainException)
- Esquema de configuração de modelos (ModelConfig)
- Utilitários numéricos globais (subespaços, Newton, JSON)
- Management command `tube` e o serviço de varreduras
"""

default_app_config = 'core.apps.CoreConfig'
