"""
Domain Value Objects - Pontos de T*G, raios, configuração de Newton e tubos.
"""
from dataclasses import dataclass, replace
from enum import Enum
from typing import Optional

import numpy as np

from lie.domain import GroupDescriptor
from splitting.domain import AdaptedSplitting, SigmaMap


class SimpleTubeStrategy(str, Enum):
    """Como m₁ (e portanto E) é calculado."""
    SHIFT = "SHIFT"                  # μ = 0: (g, ν) ↦ (g, ν + μ)
    SO3_CLOSED = "SO3_CLOSED"        # ℱ com a = ‖λ‖²
    SL2_ELLIPTIC = "SL2_ELLIPTIC"    # ‖μ‖² ≠ 0, ℱ com a = ‖λ‖² da forma traço
    SL2_NILPOTENT = "SL2_NILPOTENT"  # ‖μ‖² = 0, ℰ(−tr ad_λ|q)
    GENERIC = "GENERIC"              # m₁ numérico (dim q = 2)

    @classmethod
    def choices(cls):
        return [(item.value, item.name) for item in cls]


class RestrictedTubeStrategy(str, Enum):
    SO3_CLOSED = "SO3_CLOSED"
    NEWTON = "NEWTON"

    @classmethod
    def choices(cls):
        return [(item.value, item.name) for item in cls]


class TubeKind(str, Enum):
    SIMPLE = "simple"
    RESTRICTED = "restricted"

    @classmethod
    def choices(cls):
        return [(item.value, item.name) for item in cls]


@dataclass(frozen=True)
class CotangentGroupPoint:
    """(g, ν) ∈ G × g* ≅ T*G (trivialização à esquerda)."""
    g: np.ndarray
    nu: np.ndarray

    def left_translate(self, h: np.ndarray) -> "CotangentGroupPoint":
        return CotangentGroupPoint(h @ self.g, self.nu)

    def distance(self, other: "CotangentGroupPoint") -> float:
        return max(
            float(np.max(np.abs(self.g - other.g))),
            float(np.max(np.abs(self.nu - other.nu))),
        )

    def to_dict(self) -> dict:
        return {'g': self.g.tolist(), 'nu': self.nu.tolist()}


@dataclass(frozen=True)
class TubeRadii:
    """Raios (norma euclidiana das coordenadas) de cada componente do domínio."""
    nu: float = np.inf
    lam: float = np.inf
    eps: float = np.inf
    a: float = np.inf
    b: float = np.inf

    @classmethod
    def scaled(cls, mu_scale: float, slice_scale: Optional[float] = None, factor: Optional[float] = None) -> "TubeRadii":
        """
        Raios = fator × escala (‖μ‖ para ν, ε, b; ‖q‖ para a).

        λ vive na álgebra (adimensional): raio igual ao fator.
        """
        from core.utils.policy import policy

        factor = policy('RADIUS_FACTOR') if factor is None else factor
        slice_scale = mu_scale if slice_scale is None else slice_scale
        return cls(
            nu=factor * mu_scale,
            lam=factor,
            eps=factor * mu_scale,
            a=factor * slice_scale,
            b=factor * mu_scale,
        )

    def to_dict(self) -> dict:
        return {key: getattr(self, key) for key in ('nu', 'lam', 'eps', 'a', 'b')}


@dataclass(frozen=True)
class NewtonConfig:
    tol: float = 1e-12
    accept_tol: float = 1e-10
    max_iter: int = 50
    trust_factor: float = 0.5

    @classmethod
    def from_settings(cls) -> "NewtonConfig":
        from core.utils.policy import policy

        return cls(
            tol=policy('NEWTON_TOL'),
            accept_tol=policy('NEWTON_ACCEPT_TOL'),
            max_iter=policy('NEWTON_MAX_ITER'),
            trust_factor=policy('NEWTON_TRUST_FACTOR'),
        )


@dataclass(frozen=True, eq=False)
class SimpleTube:
    """
    Tubo simples em (e, μ) para o splitting g = g_μ ⊕ q.

    exponent_scale ≠ 1 produz o mapa perturbado usado como controle negativo.
    """
    descriptor: GroupDescriptor
    mu: np.ndarray
    gmu: np.ndarray
    q: np.ndarray
    strategy: SimpleTubeStrategy
    radii: TubeRadii = TubeRadii()
    exponent_scale: float = 1.0

    @property
    def nu_dimension(self) -> int:
        return self.gmu.shape[1]

    @property
    def lam_dimension(self) -> int:
        return self.q.shape[1]

    def perturbed(self, factor: float) -> "SimpleTube":
        return replace(self, exponent_scale=self.exponent_scale * factor)


@dataclass(frozen=True, eq=False)
class RestrictedTube:
    """Tubo restrito sobre um splitting adaptado: ν ∈ g_μ*, λ ∈ o, ε ∈ l*."""
    splitting: AdaptedSplitting
    simple: SimpleTube
    sigma: SigmaMap
    strategy: RestrictedTubeStrategy
    newton: NewtonConfig = NewtonConfig()
    radii: TubeRadii = TubeRadii()

    @property
    def descriptor(self) -> GroupDescriptor:
        return self.splitting.descriptor

    @property
    def mu(self) -> np.ndarray:
        return self.splitting.mu
