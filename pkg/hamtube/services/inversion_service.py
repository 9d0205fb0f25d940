"""
Inversion Service - Inversão numérica dos tubos hamiltonianos.

Gauss-Newton (mínimos quadrados) sobre as coordenadas do modelo
(ξ, ν_s, ν_p, λ, a, b), com g = g₀ exp(ξ), e um elemento exp(η) de H^T
para alinhar o representante alvo. No modelo so3r3 o chute é analítico:
‖Q‖ dá a, ‖Q × P‖ dá ν, o alinhamento de referenciais dá g.
"""
import logging

import numpy as np

from core.domain.exceptions import DomainExitError, UnsupportedConfigurationError
from core.utils.newton_utils import damped_newton
from core.utils.policy import policy
from hamtube.domain import CotangentModel, ModelKind, ModelPoint, OutsideTubeImageError, PhasePoint
from lie.services import AlgebraService

from .tube_service import HamiltonianTubeService

logger = logging.getLogger(__name__)

# Norma máxima de cada passo de Gauss-Newton (coordenadas adimensionais de g)
_TRUST_RADIUS = 0.5


class TubeInversionService:

    @staticmethod
    def tube_invert(model: CotangentModel, phase: PhasePoint) -> ModelPoint:
        """
        Ponto do modelo cuja imagem pelo tubo é phase.

        Raises:
            OutsideTubeImageError: Gauss-Newton sem convergência
            RadiusViolationError: solução fora dos raios do modelo
        """
        if phase.is_representative:
            seed = TubeInversionService.representative_seed(model, phase)
        else:
            seed = TubeInversionService.so3r3_seed(model, phase)

        point, residual = TubeInversionService.refine(model, seed, phase)
        scale = max(1.0, float(np.max(np.abs(phase.components()))))
        if residual >= policy('INVERSION_TOL') * scale:
            logger.warning("Inversão sem convergência (resíduo %.3e)", residual)
            raise OutsideTubeImageError(residual, policy('INVERSION_MAX_ITER'))

        # Reavalia com checagem de raios
        HamiltonianTubeService.general_tube_eval(model, point)
        return point

    # ------------------------------------------------------------------
    # Chutes iniciais
    # ------------------------------------------------------------------

    @staticmethod
    def representative_seed(model: CotangentModel, phase: PhasePoint) -> ModelPoint:
        """g₀ = g, ν₀ = ν − μ projetado em [s | p], (a, b) projetados em B e B*."""
        data, splitting = model.slice_data, model.splitting
        shifted = phase.nu - model.mu
        a, *_ = np.linalg.lstsq(data.B, phase.a, rcond=None)
        return ModelPoint(
            g=phase.g,
            nu_s=data.s.T @ shifted,
            nu_p=splitting.p.T @ shifted,
            lam=np.zeros(splitting.o.shape[1]),
            a=a,
            b=data.B.T @ (phase.b - model.alpha),
        )

    @staticmethod
    def so3r3_seed(model: CotangentModel, phase: PhasePoint) -> ModelPoint:
        """
        Inversão analítica em T*R³:
            a = ‖Q‖ − ‖q‖,  ν + μ = ‖Q × P‖ μ̂,  g q̂ = Q̂,  g μ̂ = (Q × P)^,  b = ⟨P, Q̂⟩ − α.
        """
        if model.kind != ModelKind.SO3R3:
            raise UnsupportedConfigurationError("pontos (Q, P) exigem o modelo so3r3")
        Q, P = phase.Q, phase.P
        momentum = np.cross(Q, P)
        Q_norm, momentum_norm = float(np.linalg.norm(Q)), float(np.linalg.norm(momentum))
        if Q_norm == 0.0 or momentum_norm == 0.0:
            raise OutsideTubeImageError(np.inf, 0)

        q_hat = model.q / np.linalg.norm(model.q)
        mu_hat = model.mu / np.linalg.norm(model.mu)
        Q_hat, m_hat = Q / Q_norm, momentum / momentum_norm
        source = np.column_stack([q_hat, mu_hat, np.cross(q_hat, mu_hat)])
        target = np.column_stack([Q_hat, m_hat, np.cross(Q_hat, m_hat)])

        p_basis = model.splitting.p
        shift = (momentum_norm - np.linalg.norm(model.mu)) * mu_hat
        return ModelPoint(
            g=target @ source.T,
            nu_s=np.zeros(0),
            nu_p=p_basis.T @ shift,
            lam=np.zeros(0),
            a=np.array([Q_norm - np.linalg.norm(model.q)]),
            b=np.array([float(P @ Q_hat) - float(model.alpha[0])]),
        )

    # ------------------------------------------------------------------
    # Gauss-Newton
    # ------------------------------------------------------------------

    @staticmethod
    def forward(model: CotangentModel, point: ModelPoint) -> PhasePoint:
        """Tubo geral, seguido de φ no modelo so3r3."""
        phase = HamiltonianTubeService.evaluate_unchecked(model, point)
        if model.kind == ModelKind.SO3R3:
            return HamiltonianTubeService.phase_map(model, phase)
        return phase

    @staticmethod
    def refine(model: CotangentModel, seed: ModelPoint, phase: PhasePoint):
        """
        Minimiza ‖forward(x) − h·phase‖ a partir do chute.

        Returns:
            (ModelPoint, resíduo final)
        """
        descriptor = model.descriptor
        n = descriptor.dimension
        flat0 = seed.flat()
        k = flat0.size
        twist = model.h.shape[1] if phase.is_representative else 0
        target_size = phase.components().size

        def unpack(x: np.ndarray):
            g = seed.g @ AlgebraService.exp(descriptor, x[:n])
            point = ModelPoint.from_flat(model, g, x[n:n + k])
            eta = model.h @ x[n + k:] if twist else None
            return point, eta

        def residual(x: np.ndarray) -> np.ndarray:
            point, eta = unpack(x)
            try:
                image = TubeInversionService.forward(model, point)
            except DomainExitError:
                return np.full(target_size, np.inf)
            target = HamiltonianTubeService.twist_action(model, eta, phase) if twist else phase
            return image.components() - target.components()

        result = damped_newton(
            residual,
            np.zeros(n + k + twist),
            tol=policy('INVERSION_TOL'),
            max_iter=policy('INVERSION_MAX_ITER'),
            trust_radius=_TRUST_RADIUS,
        )
        point, _ = unpack(result.x)
        logger.debug("Inversão: %d iterações, resíduo %.3e", result.iterations, result.residual_norm)
        return point, result.residual_norm
