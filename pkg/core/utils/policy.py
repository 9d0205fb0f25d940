"""
core/utils/policy.py

Acesso às políticas numéricas definidas em settings.HAMTUBE.

Os serviços nunca leem settings diretamente: passam por `policy()` para que
um único ponto trate chaves ausentes com mensagem clara.
"""

from django.conf import settings

from core.domain.exceptions import ConfigSchemaError


def policy(key: str):
    """
    Retorna o valor configurado em settings.HAMTUBE[key].

    Raises:
        ConfigSchemaError: se a chave não existir na configuração
    """
    try:
        return settings.HAMTUBE[key]
    except KeyError:
        raise ConfigSchemaError(f"HAMTUBE.{key}", "chave ausente em settings")
