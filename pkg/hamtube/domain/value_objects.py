"""
Domain Value Objects - Modelos cotangentes e pontos de fase.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional

import numpy as np

from core.domain.exceptions import ConfigSchemaError
from core.utils.json_utils import parse_vector
from gtubes.domain import RestrictedTube, TubeRadii
from lie.domain import GroupDescriptor, Representation
from splitting.domain import AdaptedSplitting, SymplecticSliceData


class ModelKind(str, Enum):
    """Tipo do modelo cotangente"""
    SO3R3 = 'so3r3'
    GENERIC = 'generic'

    @classmethod
    def choices(cls):
        return [(item.value, item.name) for item in cls]


class PhaseKind(str, Enum):
    """Representação de um ponto do espaço de fase"""
    REPRESENTATIVE = 'representative'
    COTANGENT_R3 = 'cotangent_r3'

    @classmethod
    def choices(cls):
        return [(item.value, item.name) for item in cls]


@dataclass(frozen=True, eq=False)
class CotangentModel:
    """
    Q = G ×_H S com ponto base z = φ([e, μ, 0, α]_H).

    Para o modelo SO3R3, q e p guardam o ponto (q, p) ∈ T*R³, S = span q̂ e
    α = ⟨p, q̂⟩.
    """
    name: str
    kind: ModelKind
    descriptor: GroupDescriptor
    mu: np.ndarray
    h: np.ndarray
    representation: Representation
    alpha: np.ndarray
    splitting: AdaptedSplitting
    slice_data: SymplecticSliceData
    restricted: RestrictedTube
    radii: TubeRadii
    q: Optional[np.ndarray] = None
    p: Optional[np.ndarray] = None

    @property
    def slice_dimension(self) -> int:
        """dim S"""
        return self.representation.dimension

    @property
    def dimensions(self) -> Dict[str, int]:
        data = self.slice_data
        return {
            'g': self.descriptor.dimension,
            'h': self.h.shape[1],
            'S': self.slice_dimension,
            'B': data.B.shape[1],
            'C': data.C.shape[1],
            'gz': data.gz.shape[1],
            's': data.s.shape[1],
            'p': self.splitting.p.shape[1],
            'o': self.splitting.o.shape[1],
            'l': self.splitting.l.shape[1],
            'n': self.splitting.n.shape[1],
        }

    def __repr__(self):
        return f"CotangentModel(name={self.name!r}, kind={self.kind.value}, dims={self.dimensions})"


@dataclass(frozen=True)
class ModelPoint:
    """
    Ponto de G × (s* ⊕ p*) × o × B × B*.

    ν_s e ν_p são valores nas bases s e p; a e b são coordenadas nas bases
    de B e dual de B.
    """
    g: np.ndarray
    nu_s: np.ndarray
    nu_p: np.ndarray
    lam: np.ndarray
    a: np.ndarray
    b: np.ndarray

    @classmethod
    def center(cls, model: CotangentModel) -> "ModelPoint":
        dims = model.dimensions
        return cls(
            g=np.eye(model.descriptor.matrix_size),
            nu_s=np.zeros(dims['s']),
            nu_p=np.zeros(dims['p']),
            lam=np.zeros(dims['o']),
            a=np.zeros(dims['B']),
            b=np.zeros(dims['B']),
        )

    @classmethod
    def from_flat(cls, model: CotangentModel, g: np.ndarray, coordinates: np.ndarray) -> "ModelPoint":
        """Inverso de flat(): coordenadas na ordem (ν_s, ν_p, λ, a, b)."""
        dims = model.dimensions
        sizes = [dims['s'], dims['p'], dims['o'], dims['B'], dims['B']]
        parts = np.split(np.asarray(coordinates, dtype=float), np.cumsum(sizes)[:-1])
        return cls(np.asarray(g, dtype=float), *parts)

    def flat(self) -> np.ndarray:
        return np.concatenate([self.nu_s, self.nu_p, self.lam, self.a, self.b])

    def left_translate(self, h: np.ndarray) -> "ModelPoint":
        return ModelPoint(h @ self.g, self.nu_s, self.nu_p, self.lam, self.a, self.b)

    def to_dict(self) -> dict:
        return {
            'g': self.g.tolist(),
            'nu_s': self.nu_s.tolist(),
            'nu_p': self.nu_p.tolist(),
            'lambda': self.lam.tolist(),
            'a': self.a.tolist(),
            'b': self.b.tolist(),
        }


@dataclass(frozen=True)
class PhasePoint:
    """
    Ponto do espaço de fase: (Q, P) ∈ T*R³ ou representante (g, ν, a, b) de
    uma classe em J_{H^T}⁻¹(0) ⊂ T*(G × S).
    """
    kind: PhaseKind
    g: Optional[np.ndarray] = None
    nu: Optional[np.ndarray] = None
    a: Optional[np.ndarray] = None
    b: Optional[np.ndarray] = None
    Q: Optional[np.ndarray] = None
    P: Optional[np.ndarray] = None

    @classmethod
    def representative(cls, g, nu, a, b) -> "PhasePoint":
        return cls(
            PhaseKind.REPRESENTATIVE,
            g=np.asarray(g, dtype=float),
            nu=np.asarray(nu, dtype=float),
            a=np.asarray(a, dtype=float),
            b=np.asarray(b, dtype=float),
        )

    @classmethod
    def cotangent(cls, Q, P) -> "PhasePoint":
        return cls(PhaseKind.COTANGENT_R3, Q=np.asarray(Q, dtype=float), P=np.asarray(P, dtype=float))

    @classmethod
    def from_dict(cls, document: dict) -> "PhasePoint":
        """
        Inverso de to_dict(); sem 'kind', Q e P indicam ponto de T*R³.

        Raises:
            ConfigSchemaError: campos ausentes ou não numéricos
        """
        kind = document.get('kind') or (
            PhaseKind.COTANGENT_R3.value if 'Q' in document else PhaseKind.REPRESENTATIVE.value
        )
        if kind == PhaseKind.COTANGENT_R3.value:
            return cls.cotangent(parse_vector(document, 'Q'), parse_vector(document, 'P'))
        if kind != PhaseKind.REPRESENTATIVE.value:
            raise ConfigSchemaError('kind', f"esperado um de {[k.value for k in PhaseKind]}")
        return cls.representative(
            parse_vector(document, 'g'),
            parse_vector(document, 'nu'),
            parse_vector(document, 'a', default=[]),
            parse_vector(document, 'b', default=[]),
        )

    @property
    def is_representative(self) -> bool:
        return self.kind == PhaseKind.REPRESENTATIVE

    def left_translate(self, h: np.ndarray) -> "PhasePoint":
        if self.is_representative:
            return PhasePoint.representative(h @ self.g, self.nu, self.a, self.b)
        return PhasePoint.cotangent(h @ self.Q, h @ self.P)

    def components(self) -> np.ndarray:
        """Vetor com todas as componentes (para distâncias e diferenças finitas)."""
        if self.is_representative:
            return np.concatenate([self.g.ravel(), self.nu, self.a, self.b])
        return np.concatenate([self.Q, self.P])

    def distance(self, other: "PhasePoint") -> float:
        return float(np.max(np.abs(self.components() - other.components())))

    def to_dict(self) -> dict:
        if self.is_representative:
            return {
                'kind': self.kind.value,
                'g': self.g.tolist(),
                'nu': self.nu.tolist(),
                'a': self.a.tolist(),
                'b': self.b.tolist(),
            }
        return {'kind': self.kind.value, 'Q': self.Q.tolist(), 'P': self.P.tolist()}


@dataclass(frozen=True)
class BatesLermanResult:
    """Predicado de Bates-Lerman num ponto do modelo."""
    holds: bool
    residuals: Dict[str, float] = field(default_factory=dict)
    momentum_residual: Optional[float] = None

    def to_dict(self) -> dict:
        return {
            'holds': self.holds,
            'residuals': dict(self.residuals),
            'momentum_residual': self.momentum_residual,
        }
