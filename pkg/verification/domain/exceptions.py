"""
Domain Exceptions - Verificação.
"""

from core.domain.exceptions import ConfigSchemaError


class UnknownSuiteError(ConfigSchemaError):
    """Suíte de verificação inexistente."""

    def __init__(self, suite: str, available):
        super().__init__('suite', f"suíte '{suite}' desconhecida; disponíveis: {', '.join(available)}")
        self.suite = suite


class InvalidFDConfigError(ConfigSchemaError):
    """Passo ou limiares de diferenças finitas inválidos."""

    def __init__(self, field: str, value):
        super().__init__(field, f"valor inválido {value!r}: esperado número positivo")
