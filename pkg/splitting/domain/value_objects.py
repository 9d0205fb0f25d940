"""
Domain Value Objects - Splittings e dados de fatia.

Todas as bases são arrays (n, k) com colunas em coordenadas de g (ou de S
para B e C). k = 0 é permitido.
"""
from dataclasses import dataclass, field
from typing import Dict, Optional

import numpy as np

from lie.domain import GroupDescriptor, Representation


@dataclass(frozen=True, eq=False)
class OmegaForm:
    """Ω^μ(ξ_i, ξ_j) = −⟨μ, [ξ_i, ξ_j]⟩ na base declarada."""
    matrix: np.ndarray

    @classmethod
    def from_mu(cls, descriptor: GroupDescriptor, mu: np.ndarray) -> "OmegaForm":
        return cls(-np.einsum('ijk,k->ij', descriptor.structure_constants, mu))

    def __call__(self, xi: np.ndarray, eta: np.ndarray) -> float:
        return float(xi @ self.matrix @ eta)

    def restricted(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        """Matriz uᵀ Ω v entre dois subespaços."""
        return u.T @ self.matrix @ v


@dataclass(frozen=True, eq=False)
class AdaptedSplitting:
    """
    g = g_μ ⊕ o ⊕ l ⊕ n, com h = h_μ ⊕ l e g_μ = h_μ ⊕ p.

    residuals guarda o resíduo de cada invariante certificada.
    """
    descriptor: GroupDescriptor
    mu: np.ndarray
    h: np.ndarray
    gmu: np.ndarray
    hmu: np.ndarray
    o: np.ndarray
    l: np.ndarray
    n: np.ndarray
    p: np.ndarray
    metric: np.ndarray
    omega: OmegaForm
    residuals: Dict[str, float] = field(default_factory=dict)

    @property
    def q(self) -> np.ndarray:
        """Complemento o ⊕ l ⊕ n de g_μ."""
        return np.hstack([self.o, self.l, self.n])

    @property
    def frame(self) -> np.ndarray:
        return np.hstack([self.gmu, self.q])

    @property
    def dimensions(self) -> Dict[str, int]:
        return {
            'g': self.descriptor.dimension,
            'h': self.h.shape[1],
            'g_mu': self.gmu.shape[1],
            'h_mu': self.hmu.shape[1],
            'o': self.o.shape[1],
            'l': self.l.shape[1],
            'n': self.n.shape[1],
            'p': self.p.shape[1],
        }


@dataclass(frozen=True)
class SigmaMap:
    """Matriz de σ(ζ) = (ad*_ζ μ)|_l nas bases de n e l: σ[j, i] = ⟨μ, [n_i, l_j]⟩."""
    matrix: np.ndarray
    condition_number: float

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]

    def __call__(self, zeta_coords: np.ndarray) -> np.ndarray:
        return self.matrix @ zeta_coords

    def solve(self, epsilon: np.ndarray) -> np.ndarray:
        if self.dimension == 0:
            return np.zeros(0)
        return np.linalg.solve(self.matrix, epsilon)


@dataclass(frozen=True, eq=False)
class SymplecticSliceData:
    """
    Fatia N = o × B × B* e splittings h_μ = g_z ⊕ s, S = B ⊕ C.

    representation: ação de h em S
    alpha: α ∈ S*
    B, C: bases em S
    b_embedding: (m, dim B) leva coordenadas de B* ao covetor de S* que anula C
    gz, s: bases em g
    gmu_ordered: [g_z | s | p], base de g_μ usada para coordenadas de ν
    """
    representation: Representation
    alpha: np.ndarray
    B: np.ndarray
    C: np.ndarray
    b_embedding: np.ndarray
    gz: np.ndarray
    s: np.ndarray
    gmu_ordered: np.ndarray
    metric: np.ndarray
    residuals: Dict[str, float] = field(default_factory=dict)

    @property
    def slice_dimension(self) -> int:
        return self.B.shape[1]

    def embed_a(self, a: np.ndarray) -> np.ndarray:
        return self.B @ a

    def embed_b(self, b: np.ndarray) -> np.ndarray:
        return self.b_embedding @ b
