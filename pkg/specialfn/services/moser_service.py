"""
Moser Service - Fator de escala m₁ de tubos simples com dim q = 2.

Com g = g_μ ⊕ q, dim q = 2, o tubo simples é E(ν,λ) = exp(m₁(ν,λ)·λ),
onde m₁ resolve h(m₁λ, ν)·m₁² = ½ e h é definida por
    ⟨μ+ν, M(λ)λ̇⟩ − ⟨μ, λ̇⟩ = h(λ,ν)·⟨μ, [λ, λ̇]⟩.

O resolvedor é genérico (dexp numérico); as fórmulas fechadas com ℰ e ℱ
são usadas apenas como chute inicial quando suas hipóteses são detectadas.
"""
import logging
import math
from typing import Optional

import numpy as np
from scipy.optimize import brentq

from core.domain.exceptions import DimensionMismatchError, UnsupportedConfigurationError
from core.utils.linalg_utils import dual_embedding, projection_residual
from lie.domain import GroupDescriptor
from lie.services import AlgebraService
from specialfn.domain import (
    MoserCase,
    NoRootInBracketError,
    ScalarSolveConfig,
    SpecialFunctionDomainError,
)
from specialfn.services.special_function_service import SpecialFunctionService

logger = logging.getLogger(__name__)

# Tolerância relativa para detectar as hipóteses das fórmulas fechadas
_LEMMA_TOL = 1e-10
# Passos da varredura em busca da primeira troca de sinal
_MARCH_STEPS = 20
_MARCH_LIMIT = 400


class MoserService:
    """
    Resolução da equação escalar de m₁.
    """

    @staticmethod
    def embed_nu(gmu: np.ndarray, q: np.ndarray, nu: np.ndarray) -> np.ndarray:
        """ν ∈ g_μ* (coordenadas na base de g_μ) ↦ ν̂ ∈ g* anulando q."""
        nu = np.atleast_1d(np.asarray(nu, dtype=float))
        if nu.shape != (gmu.shape[1],):
            raise DimensionMismatchError("ν ∈ g_μ*", gmu.shape[1], nu.shape)
        return dual_embedding(gmu, q) @ nu

    @staticmethod
    def probe_direction(descriptor: GroupDescriptor, mu: np.ndarray, q: np.ndarray, lam: np.ndarray):
        """Vetor da base de q que maximiza |⟨μ, [λ, λ̇]⟩|."""
        values = [
            mu @ AlgebraService.bracket(descriptor, lam, q[:, j])
            for j in range(q.shape[1])
        ]
        j = int(np.argmax(np.abs(values)))
        return q[:, j], float(values[j])

    @staticmethod
    def scaling_residual(
        descriptor: GroupDescriptor,
        mu: np.ndarray,
        nu_hat: np.ndarray,
        lam: np.ndarray,
        lam_dot: np.ndarray,
        denominator: float,
        m: float,
    ) -> float:
        """φ(m) = h(mλ, ν)·m² − ½."""
        if m == 0.0:
            return -0.5
        Mv = AlgebraService.dexp_right(descriptor, m * lam, lam_dot)
        numerator = (mu + nu_hat) @ Mv - mu @ lam_dot
        return m * numerator / denominator - 0.5

    @staticmethod
    def detect_case(
        descriptor: GroupDescriptor,
        mu: np.ndarray,
        nu_hat: np.ndarray,
        q: np.ndarray,
        lam: np.ndarray,
    ) -> MoserCase:
        """
        Identifica qual fórmula fechada vale numericamente para (μ, ν, q, λ).
        """
        scale = max(1.0, float(np.linalg.norm(mu)))
        brackets = np.column_stack([
            AlgebraService.bracket(descriptor, q[:, 0], q[:, 1])
        ])
        if projection_residual(q, brackets) < _LEMMA_TOL * scale:
            return MoserCase.SUBALGEBRA

        if AlgebraService.ad_cubic_coefficient(descriptor, lam) is None:
            return MoserCase.GENERIC
        A = AlgebraService.ad_matrix(descriptor, lam)
        condition = max(abs((mu + nu_hat) @ (A @ A @ q[:, j])) for j in range(q.shape[1]))
        if condition < _LEMMA_TOL * scale * max(1.0, float(np.linalg.norm(A)) ** 2):
            return MoserCase.CUBIC
        return MoserCase.GENERIC

    @staticmethod
    def restricted_trace(descriptor: GroupDescriptor, q: np.ndarray, lam: np.ndarray) -> float:
        """tr(ad_λ|_q) para q subálgebra."""
        image = AlgebraService.ad_matrix(descriptor, lam) @ q
        restricted, *_ = np.linalg.lstsq(q, image, rcond=None)
        return float(np.trace(restricted))

    @staticmethod
    def closed_form(
        case: MoserCase,
        descriptor: GroupDescriptor,
        mu: np.ndarray,
        nu_hat: np.ndarray,
        q: np.ndarray,
        lam: np.ndarray,
    ) -> Optional[float]:
        """
        m₁ pelas fórmulas fechadas:
            SUBALGEBRA: ℰ(−tr(ad_λ|_q))
            CUBIC:      ℱ(a(λ)/(4b(ν)))/√b(ν)
        """
        if case == MoserCase.SUBALGEBRA:
            return SpecialFunctionService.eval_E(-MoserService.restricted_trace(descriptor, q, lam))
        if case == MoserCase.CUBIC:
            b = MoserService.b_factor(descriptor, mu, nu_hat, q)
            a = AlgebraService.ad_cubic_coefficient(descriptor, lam)
            if b is None or b <= 0 or a is None:
                return None
            try:
                return SpecialFunctionService.eval_F(a / (4.0 * b)) / math.sqrt(b)
            except SpecialFunctionDomainError:
                return None
        return None

    @staticmethod
    def b_factor(descriptor: GroupDescriptor, mu: np.ndarray, nu_hat: np.ndarray, q: np.ndarray) -> Optional[float]:
        """b(ν) com ⟨ν+μ, [ξ,η]⟩ = b(ν)⟨μ, [ξ,η]⟩ para ξ, η ∈ q."""
        bracket = AlgebraService.bracket(descriptor, q[:, 0], q[:, 1])
        denominator = float(mu @ bracket)
        if abs(denominator) < _LEMMA_TOL * max(1.0, float(np.linalg.norm(mu))):
            return None
        return float((mu + nu_hat) @ bracket) / denominator

    @staticmethod
    def solve_m1(
        descriptor: GroupDescriptor,
        mu: np.ndarray,
        gmu: np.ndarray,
        q: np.ndarray,
        nu: np.ndarray,
        lam: np.ndarray,
        config: Optional[ScalarSolveConfig] = None,
    ) -> float:
        """
        Resolve h(m₁λ, ν)·m₁² = ½ para m₁ > 0.

        Args:
            descriptor: Grupo
            mu: μ ∈ g*
            gmu: base (n, n−2) de g_μ
            q: base (n, 2) do complemento
            nu: coordenadas de ν ∈ g_μ* na base dual de gmu
            lam: λ ∈ q em coordenadas de g

        Returns:
            m₁; 1 quando λ = 0 (limite)

        Raises:
            UnsupportedConfigurationError: dim q ≠ 2
            NoRootInBracketError: equação sem raiz (fora do domínio do tubo)
        """
        config = config or ScalarSolveConfig.from_settings()
        if q.shape[1] != 2:
            raise UnsupportedConfigurationError(f"tubo simples genérico exige dim q = 2 (recebido {q.shape[1]})")

        lam = np.asarray(lam, dtype=float)
        if np.linalg.norm(lam) == 0.0:
            return 1.0

        # 1. Direção de prova e denominador ⟨μ,[λ,λ̇]⟩
        nu_hat = MoserService.embed_nu(gmu, q, nu)
        lam_dot, denominator = MoserService.probe_direction(descriptor, mu, q, lam)
        if abs(denominator) < 1e-14 * max(1.0, np.linalg.norm(mu) * np.linalg.norm(lam)):
            logger.debug("Direção de prova degenerada para λ=%s", lam)
            return 1.0

        def phi(m: float) -> float:
            return MoserService.scaling_residual(descriptor, mu, nu_hat, lam, lam_dot, denominator, m)

        # 2. Chute inicial: fórmula fechada se as hipóteses valem
        case = MoserService.detect_case(descriptor, mu, nu_hat, q, lam)
        guess = MoserService.closed_form(case, descriptor, mu, nu_hat, q, lam) or 1.0
        logger.debug("solve_m1: caso %s, chute %.6g", case.value, guess)

        # 3. Varredura a partir de 0 até a primeira troca de sinal
        step = guess / _MARCH_STEPS
        lower = 0.0
        upper = None
        for k in range(1, _MARCH_LIMIT + 1):
            m = k * step
            value = phi(m)
            if not np.isfinite(value):
                break
            if value >= 0.0:
                upper = m
                break
            lower = m
        if upper is None:
            raise NoRootInBracketError(lower)

        # 4. Brent no intervalo e polimento por Newton
        root = brentq(phi, lower, upper, xtol=config.abs_tol, rtol=4 * np.finfo(float).eps, maxiter=config.max_iter)
        h = 1e-7 * max(1.0, root)
        for _ in range(3):
            slope = (phi(root + h) - phi(root - h)) / (2 * h)
            if slope == 0.0:
                break
            current = phi(root)
            correction = current / slope
            if abs(correction) > step or abs(phi(root - correction)) >= abs(current):
                break
            root -= correction
            if abs(correction) < config.abs_tol:
                break
        return float(root)
