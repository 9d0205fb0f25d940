"""
Tube Service - Tubos hamiltonianos de modelos cotangentes.

Pontos de fase são representantes (g, ν, a, b) de classes em
J_{H^T}⁻¹(0) ⊂ T*(G × S), com
    J_{H^T}(g, ν, a, b) = −ν|_h + a ⋄_h b
    J_{G^L}(g, ν, a, b) = Ad*_{g⁻¹} ν

T₀(g, ν, λ, a, b)  = (Φ(g, ν̃, λ; a ⋄_l b), a, b)
    ν̃ = ν + ½ λ⋄_{h_μ} ad*_λ μ + a ⋄_{h_μ} b          em [h_μ | p]

T(g, ν_s, ν_p, λ, a, b) = (Φ(g, ν̃, λ; ε), ã, b + α)
    ã = a + Γ(ν_s − a ⋄_s b − ½ λ⋄_s ad*_λ μ; b)
    ν̃ = (½ λ⋄_{g_z} ad*_λ μ + a ⋄_{g_z} b, ν_s, ν_p)  em [g_z | s | p]
    ε = ã ⋄_l (b + α)
"""
import logging

import numpy as np

from core.domain.exceptions import DimensionMismatchError, UnsupportedConfigurationError
from core.utils.linalg_utils import dual_embedding
from gtubes.domain import RadiusViolationError, validate_radius
from gtubes.services import RestrictedTubeService
from hamtube.domain import CotangentModel, ModelKind, ModelPoint, PhasePoint, validate_model_point
from lie.services import AlgebraService
from splitting.services import SliceService

from .gamma_service import GammaService

logger = logging.getLogger(__name__)


class HamiltonianTubeService:
    """
    Avaliação dos tubos T₀, geral e de T*R³.
    """

    # ------------------------------------------------------------------
    # Coordenadas de g_μ*
    # ------------------------------------------------------------------

    @staticmethod
    def tube0_basis(model: CotangentModel) -> np.ndarray:
        """[h_μ | p], base de g_μ das coordenadas de T₀."""
        return np.hstack([model.splitting.hmu, model.splitting.p])

    @staticmethod
    def embed_covector(model: CotangentModel, basis: np.ndarray, values: np.ndarray) -> np.ndarray:
        """ν̂ ∈ q° ⊂ g* com ⟨ν̂, basis_j⟩ = values_j."""
        return dual_embedding(basis, model.splitting.q) @ values

    # ------------------------------------------------------------------
    # T₀
    # ------------------------------------------------------------------

    @staticmethod
    def tube0_covector(model, nu, lam, a, b) -> np.ndarray:
        """ν̃ de T₀ mergulhado em g*."""
        splitting = model.splitting
        momentum = SliceService.quadratic_momentum(
            splitting, model.representation, splitting.o @ lam, a, b, splitting.hmu,
        )
        values = np.concatenate([momentum, nu])
        return HamiltonianTubeService.embed_covector(model, HamiltonianTubeService.tube0_basis(model), values)

    @staticmethod
    def tube0_eval(
        model: CotangentModel,
        g: np.ndarray,
        nu: np.ndarray,
        lam: np.ndarray,
        a: np.ndarray,
        b: np.ndarray,
    ) -> PhasePoint:
        """
        T₀(g, ν, λ, a, b) com ν ∈ p*, λ ∈ o, a ∈ S, b ∈ S*.

        Raises:
            DimensionMismatchError: componentes com dimensão errada
            RadiusViolationError: fora dos raios (inclusive a ⋄_h b fora de h*_r)
            NewtonNonConvergenceError: tubo restrito sem solução
        """
        splitting, representation = model.splitting, model.representation
        m = model.slice_dimension
        nu, lam, a, b = (np.atleast_1d(np.asarray(v, dtype=float)) if np.size(v) else np.zeros(0) for v in (nu, lam, a, b))
        for name, value, size in (
            ('nu', nu, splitting.p.shape[1]),
            ('lambda', lam, splitting.o.shape[1]),
            ('a', a, m),
            ('b', b, m),
        ):
            if value.shape != (size,):
                raise DimensionMismatchError(name, size, value.shape)

        # 1. Domínio: raios e (T*S)_r = {a ⋄_h b ∈ h*_r}
        radii = model.radii
        validate_radius('nu', nu, radii.nu)
        validate_radius('lambda', lam, radii.lam)
        validate_radius('a', a, radii.a)
        validate_radius('b', b, radii.b)
        validate_radius('a⋄b', AlgebraService.diamond(representation, a, b, model.h), radii.nu)

        # 2. ν̃ e ε = a ⋄_l b
        nu_hat = HamiltonianTubeService.tube0_covector(model, nu, lam, a, b)
        eps = AlgebraService.diamond(representation, a, b, splitting.l)

        # 3. Tubo restrito e representante
        point = RestrictedTubeService.evaluate_embedded(model.restricted, g, nu_hat, lam, eps)
        return PhasePoint.representative(point.g, point.nu, a, b)

    @staticmethod
    def tube0_momentum(model: CotangentModel, g, nu, lam, a, b) -> np.ndarray:
        """Ad*_{g⁻¹}(μ + ν + J_N(λ, a, b)) do modelo de T₀."""
        nu_hat = HamiltonianTubeService.tube0_covector(model, np.asarray(nu, dtype=float), lam, a, b)
        return AlgebraService.Adstar(model.descriptor, np.linalg.inv(g), model.mu + nu_hat)

    # ------------------------------------------------------------------
    # Tubo geral
    # ------------------------------------------------------------------

    @staticmethod
    def general_covector(model: CotangentModel, point: ModelPoint) -> np.ndarray:
        """ν̃ do tubo geral mergulhado em g*."""
        data = model.slice_data
        momentum = SliceService.slice_momentum(model.splitting, data, model.splitting.o @ point.lam, point.a, point.b)
        values = np.concatenate([momentum, point.nu_s, point.nu_p])
        return HamiltonianTubeService.embed_covector(model, data.gmu_ordered, values)

    @staticmethod
    def shifted_slice(model: CotangentModel, point: ModelPoint) -> np.ndarray:
        """ã = a + Γ(ν_s − a ⋄_s b − ½ λ⋄_s ad*_λ μ; b) ∈ S."""
        data = model.slice_data
        a_full = data.embed_a(point.a)
        if data.s.shape[1] == 0:
            return a_full
        correction = SliceService.slice_momentum(
            model.splitting, data, model.splitting.o @ point.lam, point.a, point.b, basis=data.s,
        )
        return a_full + GammaService.gamma_eval(model, point.nu_s - correction, point.b)

    @staticmethod
    def general_tube_eval(model: CotangentModel, point: ModelPoint) -> PhasePoint:
        """
        Tubo hamiltoniano em z = φ([e, μ, 0, α]).

        Raises:
            RadiusViolationError / SingularGammaError / NewtonNonConvergenceError
        """
        validate_model_point(model, point)
        return HamiltonianTubeService.evaluate_unchecked(model, point)

    @staticmethod
    def evaluate_unchecked(model: CotangentModel, point: ModelPoint) -> PhasePoint:
        """Tubo geral sem checagem de raios (iterações internas da inversão)."""
        data = model.slice_data

        # 1. Deslocamento de Γ na fatia
        a_tilde = HamiltonianTubeService.shifted_slice(model, point)
        b_tilde = model.alpha + data.embed_b(point.b)

        # 2. ν̃ em g_μ* e ε = ã ⋄_l (b + α)
        nu_hat = HamiltonianTubeService.general_covector(model, point)
        eps = AlgebraService.diamond(model.representation, a_tilde, b_tilde, model.splitting.l)

        # 3. Tubo restrito
        result = RestrictedTubeService.evaluate_embedded(model.restricted, point.g, nu_hat, point.lam, eps)
        return PhasePoint.representative(result.g, result.nu, a_tilde, b_tilde)

    @staticmethod
    def model_momentum(model: CotangentModel, point: ModelPoint) -> np.ndarray:
        """J_Y[g, ν, v] = Ad*_{g⁻¹}(μ + ν + J_N(v))."""
        nu_hat = HamiltonianTubeService.general_covector(model, point)
        return AlgebraService.Adstar(model.descriptor, np.linalg.inv(point.g), model.mu + nu_hat)

    # ------------------------------------------------------------------
    # SO(3) em T*R³
    # ------------------------------------------------------------------

    @staticmethod
    def _require_so3r3(model: CotangentModel) -> None:
        if model.kind != ModelKind.SO3R3:
            raise UnsupportedConfigurationError(f"operação exige o modelo so3r3 (recebido {model.kind.value})")

    @staticmethod
    def so3_r3_tube_eval(model: CotangentModel, g: np.ndarray, nu, a, b) -> PhasePoint:
        """
        Q = g(q + a q̂), P = g((ν + μ) × (q + a q̂)/‖q + a q̂‖² + (b + α) q̂).

        Args:
            g: rotação
            nu: valor de ν ∈ g_μ* na base de g_μ
            a, b: coordenadas ao longo de q̂

        Raises:
            RadiusViolationError: fora dos raios (‖a‖ < ‖q‖ pelo raio de Palais)
        """
        HamiltonianTubeService._require_so3r3(model)
        nu, a, b = (np.atleast_1d(np.asarray(v, dtype=float)) for v in (nu, a, b))
        validate_radius('nu', nu, model.radii.nu)
        q_norm = float(np.linalg.norm(model.q))
        if float(np.linalg.norm(a)) >= q_norm:
            raise RadiusViolationError('a', float(np.linalg.norm(a)), q_norm)
        validate_radius('a', a, model.radii.a)
        validate_radius('b', b, model.radii.b)

        nu_hat = HamiltonianTubeService.embed_covector(model, model.splitting.gmu, nu)
        return HamiltonianTubeService.phase_map(
            model, PhasePoint.representative(g, nu_hat + model.mu, a, b + model.alpha),
        )

    @staticmethod
    def phase_map(model: CotangentModel, phase: PhasePoint) -> PhasePoint:
        """
        φ: J_{H^T}⁻¹(0) → T*R³, (g, ν, a, b) ↦ (g x, g(ν × x/‖x‖² + b q̂)), x = q + a q̂.
        """
        HamiltonianTubeService._require_so3r3(model)
        q_hat = model.q / np.linalg.norm(model.q)
        x = model.q + float(phase.a[0]) * q_hat
        momentum = np.cross(phase.nu, x) / float(x @ x) + float(phase.b[0]) * q_hat
        return PhasePoint.cotangent(phase.g @ x, phase.g @ momentum)

    # ------------------------------------------------------------------
    # Momentos e invariantes
    # ------------------------------------------------------------------

    @staticmethod
    def center(model: CotangentModel) -> PhasePoint:
        """Representante de z = φ(e, μ, 0, α), ou (q, p) para o modelo so3r3."""
        if model.kind == ModelKind.SO3R3:
            return PhasePoint.cotangent(model.q, model.p)
        m = model.slice_dimension
        return PhasePoint.representative(np.eye(model.descriptor.matrix_size), model.mu, np.zeros(m), model.alpha)

    @staticmethod
    def phase_momentum(model: CotangentModel, phase: PhasePoint) -> np.ndarray:
        """J_{G^L}: Ad*_{g⁻¹}ν para representantes, Q × P em T*R³."""
        if phase.is_representative:
            return AlgebraService.Adstar(model.descriptor, np.linalg.inv(phase.g), phase.nu)
        return np.cross(phase.Q, phase.P)

    @staticmethod
    def membership_residual(model: CotangentModel, phase: PhasePoint) -> float:
        """‖ν|_h − a ⋄_h b‖ (zero para pontos de T*R³)."""
        if not phase.is_representative or model.h.shape[1] == 0:
            return 0.0
        diamond = AlgebraService.diamond(model.representation, phase.a, phase.b, model.h)
        return float(np.max(np.abs(model.h.T @ phase.nu - diamond)))

    @staticmethod
    def twist_action(model: CotangentModel, eta: np.ndarray, phase: PhasePoint) -> PhasePoint:
        """h·(g, ν, a, b) = (g h⁻¹, Ad*_{h⁻¹} ν, h a, h b) com h = exp(η), η ∈ h."""
        h_inv = AlgebraService.exp(model.descriptor, -eta)
        action = AlgebraService.group_action(model.representation, eta)
        return PhasePoint.representative(
            phase.g @ h_inv,
            AlgebraService.Adstar(model.descriptor, h_inv, phase.nu),
            action @ phase.a,
            np.linalg.solve(action.T, phase.b),
        )
