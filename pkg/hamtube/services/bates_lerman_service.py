"""
Bates-Lerman Service - Descrição de J⁻¹(μ) em coordenadas do modelo.

Z = {g ∈ G_μ, ν = 0, J_N(λ, a, b) = 0}. O tubo leva Z em J⁻¹(μ); a
inclusão é verificada diretamente e a recíproca por amostragem (pontos de
J⁻¹(μ) perto do centro invertidos pelo tubo).
"""
import logging
from typing import List, Optional, Tuple

import numpy as np

from core.domain.exceptions import UnsupportedConfigurationError
from core.utils.policy import policy
from hamtube.domain import BatesLermanResult, CotangentModel, ModelKind, ModelPoint, PhasePoint
from lie.services import AlgebraService
from splitting.services import SliceService

from .inversion_service import TubeInversionService
from .tube_service import HamiltonianTubeService

logger = logging.getLogger(__name__)


class BatesLermanService:

    @staticmethod
    def bates_lerman_predicate(
        model: CotangentModel,
        point: ModelPoint,
        tol: Optional[float] = None,
    ) -> BatesLermanResult:
        """
        Testa as três condições de Z e, quando valem, ‖J(T(pt)) − μ‖.

        O ponto é dado nas coordenadas do tubo geral (ModelPoint) e a inclusão
        é medida em general_tube_eval. Com α = 0 essas coordenadas coincidem
        com o domínio de T₀ (ν_s vazio, ν_p = ν) e o resultado é o mesmo de
        tube0_eval.
        """
        scale = max(1.0, float(np.linalg.norm(model.mu)))
        tol = policy('MEMBERSHIP_TOL') * scale if tol is None else tol
        data = model.slice_data

        # 1. Condições de Z
        slice_momentum = SliceService.slice_momentum(
            model.splitting, data, model.splitting.o @ point.lam, point.a, point.b,
        )
        residuals = {
            'isotropy': float(np.linalg.norm(AlgebraService.Adstar(model.descriptor, point.g, model.mu) - model.mu)),
            'nu': float(np.linalg.norm(np.concatenate([point.nu_s, point.nu_p]))),
            'slice_momentum': float(np.linalg.norm(slice_momentum)) if slice_momentum.size else 0.0,
        }
        holds = all(value < tol for value in residuals.values())
        if not holds:
            return BatesLermanResult(False, residuals)

        # 2. Inclusão Z ⊂ J⁻¹(μ)
        phase = HamiltonianTubeService.general_tube_eval(model, point)
        if model.kind == ModelKind.SO3R3:
            phase = HamiltonianTubeService.phase_map(model, phase)
        momentum = HamiltonianTubeService.phase_momentum(model, phase)
        return BatesLermanResult(True, residuals, float(np.linalg.norm(momentum - model.mu)))

    @staticmethod
    def sample_level_set(
        model: CotangentModel,
        count: int,
        rng: np.random.Generator,
        spread: float = 0.5,
    ) -> List[PhasePoint]:
        """
        Pontos (Q, P) com Q × P = μ perto de (q, p), no modelo so3r3.

        Q = q + δ com δ ⊥ μ, P = μ × Q/‖Q‖² + (α + β) Q̂.
        """
        if model.kind != ModelKind.SO3R3:
            raise UnsupportedConfigurationError("amostragem de J⁻¹(μ) disponível apenas para o modelo so3r3")

        q_norm = float(np.linalg.norm(model.q))
        q_hat = model.q / q_norm
        mu_hat = model.mu / np.linalg.norm(model.mu)
        tangent = np.cross(mu_hat, q_hat)
        radius_q = spread * min(model.radii.a, q_norm)
        radius_b = spread * (model.radii.b if np.isfinite(model.radii.b) else 1.0)

        points = []
        for _ in range(count):
            u = rng.uniform(-1.0, 1.0, size=2) * radius_q / np.sqrt(2)
            Q = model.q + u[0] * q_hat + u[1] * tangent
            Q_hat = Q / np.linalg.norm(Q)
            beta = rng.uniform(-1.0, 1.0) * radius_b
            P = np.cross(model.mu, Q) / float(Q @ Q) + (float(model.alpha[0]) + beta) * Q_hat
            points.append(PhasePoint.cotangent(Q, P))
        return points

    @staticmethod
    def level_set_consistency(
        model: CotangentModel,
        phase: PhasePoint,
    ) -> Tuple[ModelPoint, BatesLermanResult, float]:
        """
        Inverte um ponto de J⁻¹(μ) e testa o predicado na pré-imagem.

        Returns:
            (ponto do modelo, resultado do predicado, resíduo da ida e volta)
        """
        point = TubeInversionService.tube_invert(model, phase)
        # Tolerância do predicado compatível com a precisão da inversão
        tol = 1e-8 * max(1.0, float(np.linalg.norm(model.mu)))
        result = BatesLermanService.bates_lerman_predicate(model, point, tol=tol)
        roundtrip = TubeInversionService.forward(model, point).distance(phase)
        return point, result, roundtrip
