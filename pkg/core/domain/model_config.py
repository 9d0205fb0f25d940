"""
Domain Value Objects - Configuração de modelos cotangentes (esquema JSON).

Esquema publicado em docs/CONFIG_SCHEMA.md:

    {
      "name": "so3r3",
      "kind": "so3r3" | "generic",
      "group": "so3" | "sl2r" | "<arquivo>.json",
      "q": [..], "p": [..],                      (kind = so3r3)
      "mu": [..], "h": [[..], ..],               (kind = generic)
      "representation": [[[..]], ..], "alpha": [..],
      "radii": {"factor": 0.3} | {"nu": .., "lam": .., "eps": .., "a": .., "b": ..},
      "tolerances": {"NEWTON_TOL": .., ...},
      "seed": 0
    }
"""
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Union

import numpy as np

from core.utils import json_utils

from .exceptions import ConfigSchemaError

MODEL_KINDS = ('so3r3', 'generic')
RADIUS_KEYS = ('nu', 'lam', 'eps', 'a', 'b')
TOLERANCE_KEYS = ('NEWTON_TOL', 'NEWTON_ACCEPT_TOL', 'NEWTON_MAX_ITER', 'NEWTON_TRUST_FACTOR')


@dataclass(frozen=True, eq=False)
class ModelConfig:
    """Configuração validada de um modelo cotangente."""
    name: str
    kind: str
    group: str
    mu: Optional[np.ndarray] = None
    q: Optional[np.ndarray] = None
    p: Optional[np.ndarray] = None
    h: Optional[np.ndarray] = None
    representation: Optional[np.ndarray] = None
    alpha: Optional[np.ndarray] = None
    radius_factor: Optional[float] = None
    radii: Dict[str, float] = field(default_factory=dict)
    tolerances: Dict[str, float] = field(default_factory=dict)
    seed: Optional[int] = None

    @classmethod
    def from_source(cls, source: Union[str, Path]) -> "ModelConfig":
        """Carrega de um caminho JSON ou do nome de um modelo distribuído."""
        from django.conf import settings

        path = Path(source)
        if not path.exists() and not str(source).endswith('.json'):
            path = Path(settings.MODEL_FIXTURES_DIR) / f"{source}.json"
        return cls.from_dict(json_utils.load_document(path))

    @classmethod
    def from_dict(cls, document: dict) -> "ModelConfig":
        """
        Raises:
            ConfigSchemaError: campo ausente, tipo errado ou dimensões inconsistentes
        """
        kind = document.get('kind')
        if kind not in MODEL_KINDS:
            raise ConfigSchemaError('kind', f"esperado um de {MODEL_KINDS}, recebido {kind!r}")
        group = document.get('group', 'so3')
        if not isinstance(group, str):
            raise ConfigSchemaError('group', "esperado nome ou caminho")

        values = {
            'name': str(document.get('name', kind)),
            'kind': kind,
            'group': group,
        }
        if kind == 'so3r3':
            if group != 'so3':
                raise ConfigSchemaError('group', "o modelo so3r3 exige o grupo so3")
            values['q'] = json_utils.parse_vector(document, 'q')
            values['p'] = json_utils.parse_vector(document, 'p')
        else:
            values['mu'] = json_utils.parse_vector(document, 'mu')
            values['h'] = cls._parse_array(document, 'h', ndim=2, default=[])
            values['representation'] = cls._parse_array(document, 'representation', ndim=3, default=[])
            values['alpha'] = json_utils.parse_vector(document, 'alpha')

        values.update(cls._parse_radii(document.get('radii', {})))
        values['tolerances'] = cls._parse_tolerances(document.get('tolerances', {}))

        seed = document.get('seed')
        if seed is not None and (not isinstance(seed, int) or isinstance(seed, bool)):
            raise ConfigSchemaError('seed', "esperado inteiro")
        values['seed'] = seed

        config = cls(**values)
        validate_model_config(config)
        return config

    @staticmethod
    def _parse_array(document: dict, key: str, ndim: int, default: List) -> np.ndarray:
        raw = document.get(key, default)
        try:
            array = np.asarray(raw, dtype=float)
        except (TypeError, ValueError):
            raise ConfigSchemaError(key, "esperado array numérico")
        if array.size == 0:
            return np.zeros((0,) * ndim)
        if array.ndim != ndim:
            raise ConfigSchemaError(key, f"esperado array de {ndim} dimensões, recebido {array.ndim}")
        if not np.all(np.isfinite(array)):
            raise ConfigSchemaError(key, "valores não finitos")
        return array

    @staticmethod
    def _parse_radii(radii: dict) -> dict:
        if not isinstance(radii, dict):
            raise ConfigSchemaError('radii', "esperado objeto")
        unknown = set(radii) - set(RADIUS_KEYS) - {'factor'}
        if unknown:
            raise ConfigSchemaError('radii', f"chaves desconhecidas {sorted(unknown)}")
        parsed = {}
        for key, value in radii.items():
            if not isinstance(value, (int, float)) or isinstance(value, bool) or value <= 0:
                raise ConfigSchemaError(f'radii.{key}', "esperado número positivo")
            parsed[key] = float(value)
        factor = parsed.pop('factor', None)
        return {'radius_factor': factor, 'radii': parsed}

    @staticmethod
    def _parse_tolerances(tolerances: dict) -> dict:
        if not isinstance(tolerances, dict):
            raise ConfigSchemaError('tolerances', "esperado objeto")
        unknown = set(tolerances) - set(TOLERANCE_KEYS)
        if unknown:
            raise ConfigSchemaError('tolerances', f"chaves desconhecidas {sorted(unknown)}")
        for key, value in tolerances.items():
            if not isinstance(value, (int, float)) or isinstance(value, bool) or value <= 0:
                raise ConfigSchemaError(f'tolerances.{key}', "esperado número positivo")
        return dict(tolerances)

    def to_dict(self) -> dict:
        document = {'name': self.name, 'kind': self.kind, 'group': self.group}
        for key in ('mu', 'q', 'p', 'h', 'representation', 'alpha'):
            value = getattr(self, key)
            if value is not None:
                document[key] = value.tolist()
        radii = dict(self.radii)
        if self.radius_factor is not None:
            radii['factor'] = self.radius_factor
        if radii:
            document['radii'] = radii
        if self.tolerances:
            document['tolerances'] = dict(self.tolerances)
        if self.seed is not None:
            document['seed'] = self.seed
        return document


def validate_model_config(config: ModelConfig) -> None:
    """
    Valida dimensões cruzadas da configuração.

    Args:
        config: Configuração já convertida

    Raises:
        ConfigSchemaError: dimensões inconsistentes entre q, p, h, representação e α
    """
    if config.kind == 'so3r3':
        for key in ('q', 'p'):
            if getattr(config, key).shape != (3,):
                raise ConfigSchemaError(key, "esperado vetor de R³")
        if np.linalg.norm(config.q) == 0.0:
            raise ConfigSchemaError('q', "q deve ser não nulo")
        return

    rank = config.h.shape[0]
    if rank and config.h.shape[1] != config.mu.shape[0]:
        raise ConfigSchemaError('h', f"geradores devem ter dimensão {config.mu.shape[0]}")
    if config.representation.shape[0] != rank:
        raise ConfigSchemaError('representation', f"esperada uma matriz por gerador ({rank})")
    m = config.alpha.shape[0]
    if rank and config.representation.shape[1:] != (m, m):
        raise ConfigSchemaError('representation', f"matrizes devem ser {m}×{m} (dim α)")
