"""
Domain Value Objects - Alvos da linha de comando e varreduras.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional, Tuple

import numpy as np

from .exceptions import ConfigSchemaError


class TargetKind(str, Enum):
    """Tipos de tubo avaliáveis pela CLI"""
    SIMPLE = 'simple'
    RESTRICTED = 'restricted'
    TUBE0 = 'tube0'
    GENERAL = 'general'
    SO3R3 = 'so3r3'

    @classmethod
    def choices(cls):
        return [(item.value, item.name) for item in cls]

    @property
    def needs_model(self) -> bool:
        return self in (TargetKind.TUBE0, TargetKind.GENERAL, TargetKind.SO3R3)


class SweepCheck(str, Enum):
    """Resíduos disponíveis numa varredura"""
    PULLBACK = 'pullback'
    MOMENTUM = 'momentum'
    RESTRICTED_MOMENTUM = 'restricted_momentum'
    MEMBERSHIP = 'membership'

    @classmethod
    def choices(cls):
        return [(item.value, item.name) for item in cls]


@dataclass(frozen=True, eq=False)
class TubeTarget:
    """
    Tubo construído a partir dos argumentos da CLI.

    tube guarda o SimpleTube, RestrictedTube ou CotangentModel conforme kind.
    """
    kind: TargetKind
    tube: object

    @property
    def descriptor(self):
        return self.tube.descriptor


@dataclass(frozen=True)
class SweepParameter:
    """
    Parâmetro escalar de uma varredura: componente `index` de `component`
    percorrendo linspace(start, stop, count).
    """
    component: str
    index: int
    start: float
    stop: float
    count: int

    @classmethod
    def parse(cls, text: str) -> "SweepParameter":
        """
        Lê 'nome[.i]=início:fim:quantidade'.

        Raises:
            ConfigSchemaError: formato inválido
        """
        try:
            name, grid = text.split('=', 1)
            start, stop, count = grid.split(':')
            component, _, index = name.strip().partition('.')
            parameter = cls(component, int(index or 0), float(start), float(stop), int(count))
        except ValueError:
            raise ConfigSchemaError('--param', f"esperado nome[.i]=início:fim:quantidade, recebido {text!r}")
        if parameter.count < 1 or parameter.index < 0:
            raise ConfigSchemaError('--param', f"quantidade ≥ 1 e índice ≥ 0 ({text!r})")
        return parameter

    @property
    def name(self) -> str:
        return f"{self.component}.{self.index}"

    @property
    def values(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.count)


@dataclass(frozen=True)
class SweepRow:
    """Linha da varredura; residual None marca saída de domínio."""
    index: Tuple[int, ...]
    values: Dict[str, float]
    check: str
    residual: Optional[float] = None
    note: str = ''

    @property
    def exited(self) -> bool:
        return self.residual is None

    def cells(self, names) -> list:
        return [
            '.'.join(str(i) for i in self.index),
            *(self.values[name] for name in names),
            self.check,
            'exit' if self.exited else self.residual,
        ]
