"""
Momentum Service - Momentos de T*G e identidades dos tubos simples.

Ações em T*G ≅ G × g* (trivialização à esquerda):
    esquerda  h·(g, ν) = (hg, ν),           J_L(g, ν) = Ad*_{g⁻¹} ν
    direita   h·(g, ν) = (gh⁻¹, Ad*_{h⁻¹}ν),  J_R(g, ν) = −ν
"""
import numpy as np

from gtubes.domain import CotangentGroupPoint
from lie.domain import GroupDescriptor
from lie.services import AlgebraService


class MomentumService:

    @staticmethod
    def momentum_JL(descriptor: GroupDescriptor, point: CotangentGroupPoint) -> np.ndarray:
        return AlgebraService.Adstar(descriptor, np.linalg.inv(point.g), point.nu)

    @staticmethod
    def momentum_JR(descriptor: GroupDescriptor, point: CotangentGroupPoint) -> np.ndarray:
        return -np.asarray(point.nu, dtype=float)

    @staticmethod
    def right_action(descriptor: GroupDescriptor, h: np.ndarray, point: CotangentGroupPoint) -> CotangentGroupPoint:
        """h·(g, ν) = (g h⁻¹, Ad*_{h⁻¹} ν)."""
        h_inv = np.linalg.inv(h)
        return CotangentGroupPoint(point.g @ h_inv, AlgebraService.Adstar(descriptor, h_inv, point.nu))

    @staticmethod
    def orbit_momentum(descriptor: GroupDescriptor, mu: np.ndarray, lam: np.ndarray, basis: np.ndarray) -> np.ndarray:
        """λ ⋄ ad*_λ μ restrito a span(basis): coordenada j = ⟨μ, [λ, [η_j, λ]]⟩."""
        return np.array([
            mu @ AlgebraService.bracket(descriptor, lam, AlgebraService.bracket(descriptor, basis[:, j], lam))
            for j in range(basis.shape[1])
        ])

    @staticmethod
    def hmu_momentum_residual(
        descriptor: GroupDescriptor,
        mu: np.ndarray,
        nu_hat: np.ndarray,
        lam: np.ndarray,
        output: CotangentGroupPoint,
        hmu: np.ndarray,
    ) -> float:
        """
        Resíduo de (Ad*_E(ν+μ))|_{h_μ} = (μ+ν)|_{h_μ} − ½ λ⋄_{h_μ} ad*_λ μ.
        """
        if hmu.shape[1] == 0:
            return 0.0
        left = hmu.T @ output.nu
        right = hmu.T @ (mu + nu_hat) - 0.5 * MomentumService.orbit_momentum(descriptor, mu, lam, hmu)
        return float(np.max(np.abs(left - right)))
