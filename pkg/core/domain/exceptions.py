"""
Domain Exceptions - Exceções base compartilhadas por todos os apps.

Estas exceções representam violações de invariantes numéricas ou de
domínio e não devem ser confundidas com erros de programação.

Convenção de códigos de saída da CLI:
    2 — erro de esquema/configuração
    3 — saída de domínio ou recusa estrutural
    4 — falha de verificação
"""


class DomainException(Exception):
    """Exceção base para todas as exceções de domínio"""

    exit_code = 3

    def __init__(self, message: str, code: str = None):
        self.message = message
        self.code = code or self.__class__.__name__
        super().__init__(self.message)


class ConfigSchemaError(DomainException):
    """
    Configuração inválida.

    Levantada quando um documento JSON (modelo, grupo, splitting) não
    respeita o esquema publicado em docs/CONFIG_SCHEMA.md.
    """

    exit_code = 2

    def __init__(self, field: str, reason: str):
        message = f"Configuração inválida no campo '{field}': {reason}"
        super().__init__(message, code="CONFIG_SCHEMA")
        self.field = field
        self.reason = reason


class DomainExitError(DomainException):
    """
    Ponto fora do domínio configurado de um tubo ou solver.

    Os tubos são germes: em vez de extrapolar, a saída do domínio é
    reportada explicitamente.
    """

    def __init__(self, message: str, code: str = "DOMAIN_EXIT", **diagnostics):
        super().__init__(message, code=code)
        self.diagnostics = diagnostics


class DimensionMismatchError(DomainException):
    """Dimensões incompatíveis entre vetores, bases ou representações."""

    def __init__(self, what: str, expected, received):
        message = (
            f"Dimensão incompatível para {what}. "
            f"Esperado: {expected}, Recebido: {received}"
        )
        super().__init__(message, code="DIMENSION_MISMATCH")
        self.expected = expected
        self.received = received


class VerificationFailedError(DomainException):
    """Um relatório de verificação contém registros reprovados."""

    exit_code = 4

    def __init__(self, failed: int, total: int):
        message = f"Verificação reprovada: {failed} de {total} registros falharam"
        super().__init__(message, code="VERIFICATION_FAILED")
        self.failed = failed
        self.total = total


class PreconditionError(DomainException):
    """Pré-condição de uma construção não satisfeita (ex.: h não é subálgebra)."""

    def __init__(self, condition: str, residual: float = None):
        detail = f" (resíduo {residual:.3e})" if residual is not None else ""
        message = f"Pré-condição violada: {condition}{detail}"
        super().__init__(message, code="PRECONDITION")
        self.condition = condition
        self.residual = residual


class UnsupportedConfigurationError(DomainException):
    """Configuração fora do caso construtivo suportado."""

    def __init__(self, reason: str):
        super().__init__(f"Configuração não suportada: {reason}", code="UNSUPPORTED_CONFIGURATION")
        self.reason = reason
