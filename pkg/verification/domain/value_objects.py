"""
Domain Value Objects - Verificação por diferenças finitas.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, Iterable, Optional, Tuple

import numpy as np

from lie.domain import GroupDescriptor

from .exceptions import InvalidFDConfigError


class CheckKind(str, Enum):
    """Tipos de verificação (chaves de FD_THRESHOLDS)"""
    PULLBACK = 'pullback'
    EQUIVARIANCE = 'equivariance'
    MOMENTUM = 'momentum'
    LINEARIZATION = 'linearization'
    RESTRICTED_MOMENTUM = 'restricted_momentum'
    MEMBERSHIP = 'membership'
    GAMMA = 'gamma'
    AGREEMENT = 'agreement'
    CENTER = 'center'
    ROUNDTRIP = 'roundtrip'
    BATES_LERMAN = 'bates_lerman'
    NEGATIVE_CONTROL = 'negative_control'

    @classmethod
    def choices(cls):
        return [(item.value, item.name) for item in cls]


class SuiteName(str, Enum):
    """Suítes de verificação"""
    SIMPLE = 'simple'
    RESTRICTED = 'restricted'
    TUBE0 = 'tube0'
    GENERAL = 'general'
    SO3R3 = 'so3r3'

    @classmethod
    def choices(cls):
        return [(item.value, item.name) for item in cls]


@dataclass(frozen=True)
class FDConfig:
    """Diferenças centrais com passo fixo e limiares por tipo de verificação."""
    step: float = 1e-5
    scheme: str = 'central'
    thresholds: Dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        if not (self.step > 0):
            raise InvalidFDConfigError('step', self.step)
        if self.scheme != 'central':
            raise InvalidFDConfigError('scheme', self.scheme)
        for kind, value in self.thresholds.items():
            if not (value > 0):
                raise InvalidFDConfigError(f'thresholds.{kind}', value)

    @classmethod
    def from_settings(cls) -> "FDConfig":
        from core.utils.policy import policy

        return cls(step=policy('FD_STEP'), thresholds=dict(policy('FD_THRESHOLDS')))

    def threshold(self, kind: CheckKind) -> float:
        return self.thresholds[CheckKind(kind).value]


@dataclass(frozen=True)
class CheckRecord:
    """
    Resultado de uma verificação num ponto.

    Para controles negativos, passed significa que o mapa perturbado foi
    reprovado (resíduo acima do limiar).
    """
    point_id: str
    check: str
    residual: float
    passed: bool
    skipped: bool = False
    note: str = ''

    def to_dict(self) -> dict:
        data = {
            'point_id': self.point_id,
            'check': self.check,
            'residual': self.residual,
            'passed': self.passed,
        }
        if self.skipped:
            data['skipped'] = True
        if self.note:
            data['note'] = self.note
        return data


@dataclass(frozen=True)
class VerificationReport:
    """Registros por ponto; o resumo é sempre derivado dos registros."""
    records: Tuple[CheckRecord, ...] = ()

    @classmethod
    def of(cls, records: Iterable[CheckRecord]) -> "VerificationReport":
        return cls(tuple(records))

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        """União associativa; a ordem canônica é (check, point_id)."""
        merged = sorted(self.records + other.records, key=lambda r: (r.check, r.point_id))
        return VerificationReport(tuple(merged))

    @property
    def failed(self) -> Tuple[CheckRecord, ...]:
        return tuple(r for r in self.records if not r.passed and not r.skipped)

    @property
    def passed(self) -> bool:
        return not self.failed

    @property
    def summary(self) -> Dict[str, dict]:
        summary: Dict[str, dict] = {}
        for record in self.records:
            entry = summary.setdefault(record.check, {
                'max_residual': 0.0, 'passed': 0, 'failed': 0, 'skipped': 0,
            })
            if record.skipped:
                entry['skipped'] += 1
                continue
            entry['max_residual'] = max(entry['max_residual'], record.residual)
            entry['passed' if record.passed else 'failed'] += 1
        return summary

    def to_dict(self) -> dict:
        return {
            'passed': self.passed,
            'summary': self.summary,
            'records': [r.to_dict() for r in self.records],
        }


@dataclass(frozen=True, eq=False)
class ModelChartLayout:
    """
    Carta da fonte de um tubo: (g, w) com g = g₀ exp(ξ) e w = w₀ + ẇ.

    A forma do modelo é
        Ω((ξ₁,ẇ₁),(ξ₂,ẇ₂)) = ⟨Ẇ₂, ξ₁⟩ − ⟨Ẇ₁, ξ₂⟩ + ⟨W, [ξ₁, ξ₂]⟩ + ẇ₁ᵀ F ẇ₂
    com W(w) ∈ g* o momento total (μ + ν + J_N) e F constante. Sem
    descritor, a carta é apenas w.
    """
    descriptor: Optional[GroupDescriptor]
    dimension: int
    momentum: Optional[Callable[[np.ndarray], np.ndarray]]
    form: np.ndarray

    @property
    def group_dimension(self) -> int:
        return self.descriptor.dimension if self.descriptor is not None else 0

    @property
    def tangent_dimension(self) -> int:
        return self.group_dimension + self.dimension


@dataclass(frozen=True, eq=False)
class TargetChart:
    """
    Carta do alvo: (g, w) com w = (ν, x, y) quando há grupo, (x, y) caso
    contrário, e forma canônica
        ⟨ν̇₂, ξ₁⟩ − ⟨ν̇₁, ξ₂⟩ + ⟨ν, [ξ₁, ξ₂]⟩ + ⟨ẏ₂, ẋ₁⟩ − ⟨ẏ₁, ẋ₂⟩.
    """
    descriptor: Optional[GroupDescriptor]
    pair_dimension: int
