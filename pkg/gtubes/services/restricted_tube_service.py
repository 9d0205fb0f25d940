"""
Restricted Tube Service - Tubos restritos Φ(g, ν, λ; ε) = Θ(g, ν, λ + ζ).

ζ ∈ n é determinado implicitamente por J_R|_l(Φ) = −ε, isto é,
⟨Ad*_E(ν+μ), l_j⟩ = ε_j. A derivada desse resíduo em ζ = 0 é σ.
"""
import logging
import math
from dataclasses import replace
from typing import Optional

import numpy as np

from core.domain.exceptions import DimensionMismatchError, PreconditionError
from core.utils.newton_utils import damped_newton
from gtubes.domain import (
    ClosedFormDomainError,
    CotangentGroupPoint,
    NewtonConfig,
    NewtonNonConvergenceError,
    RestrictedTube,
    RestrictedTubeStrategy,
    TubeRadii,
    validate_radius,
)
from lie.domain import GroupDescriptor, validate_dimension
from lie.services import AlgebraService
from splitting.domain import AdaptedSplitting
from splitting.services import SplittingService

from .simple_tube_service import SimpleTubeService

logger = logging.getLogger(__name__)


class RestrictedTubeService:
    """
    Construção e avaliação de tubos restritos.
    """

    @staticmethod
    def from_splitting(
        splitting: AdaptedSplitting,
        radii: Optional[TubeRadii] = None,
        newton: Optional[NewtonConfig] = None,
        strategy: RestrictedTubeStrategy = RestrictedTubeStrategy.NEWTON,
    ) -> RestrictedTube:
        """
        Raises:
            SingularSigmaError: σ singular
            UnsupportedConfigurationError: tubo simples sem estratégia
        """
        radii = radii or TubeRadii()
        return RestrictedTube(
            splitting=splitting,
            simple=SimpleTubeService.from_splitting(splitting, radii),
            sigma=SplittingService.sigma(splitting),
            strategy=strategy,
            newton=newton or NewtonConfig.from_settings(),
            radii=radii,
        )

    @staticmethod
    def so3_restricted_tube(descriptor: GroupDescriptor, mu: np.ndarray, xi_h: np.ndarray) -> RestrictedTube:
        """
        Tubo restrito fechado de SO(3) para H = exp(R ξ_h), ξ_h ⊥ μ.

        A base de l é ξ_h/‖ξ_h‖ com a orientação dada pelo chamador (n = J·l
        acompanha o sinal), de modo que ε > 0 aponta no sentido de ξ_h.

        Raises:
            PreconditionError: μ = 0 ou ξ_h não ortogonal a μ
        """
        mu = validate_dimension("μ", mu, descriptor.dimension)
        xi_h = validate_dimension("ξ_h", xi_h, descriptor.dimension)
        if np.linalg.norm(mu) == 0.0 or np.linalg.norm(xi_h) == 0.0:
            raise PreconditionError("μ ≠ 0 e ξ_h ≠ 0")
        residual = abs(float(mu @ xi_h)) / (np.linalg.norm(mu) * np.linalg.norm(xi_h))
        if residual > 1e-12:
            raise PreconditionError("ξ_h ⊥ μ", residual)

        splitting = SplittingService.adapted_splitting(descriptor, xi_h[:, None], mu, metric=np.eye(3))
        if float(splitting.l[:, 0] @ xi_h) < 0.0:
            splitting = replace(splitting, l=-splitting.l, n=-splitting.n)
        return RestrictedTubeService.from_splitting(
            splitting, strategy=RestrictedTubeStrategy.SO3_CLOSED,
        )

    @staticmethod
    def as_newton(rtube: RestrictedTube) -> RestrictedTube:
        """Mesmo tubo avaliado pelo caminho de Newton."""
        return RestrictedTube(
            rtube.splitting, rtube.simple, rtube.sigma,
            RestrictedTubeStrategy.NEWTON, rtube.newton, rtube.radii,
        )

    # ------------------------------------------------------------------
    # Avaliação
    # ------------------------------------------------------------------

    @staticmethod
    def _check_inputs(rtube: RestrictedTube, nu, lam, eps):
        splitting = rtube.splitting
        nu = np.atleast_1d(np.asarray(nu, dtype=float))
        lam = np.atleast_1d(np.asarray(lam, dtype=float)) if np.size(lam) else np.zeros(0)
        eps = np.atleast_1d(np.asarray(eps, dtype=float)) if np.size(eps) else np.zeros(0)
        if lam.shape != (splitting.o.shape[1],):
            raise DimensionMismatchError("λ ∈ o", splitting.o.shape[1], lam.shape)
        if eps.shape != (splitting.l.shape[1],):
            raise DimensionMismatchError("ε ∈ l*", splitting.l.shape[1], eps.shape)
        validate_radius('nu', nu, rtube.radii.nu)
        validate_radius('lambda', lam, rtube.radii.lam)
        validate_radius('eps', eps, rtube.radii.eps)
        return nu, lam, eps

    @staticmethod
    def zeta_residual(rtube: RestrictedTube, g: np.ndarray, nu_hat: np.ndarray, lam_full: np.ndarray, eps: np.ndarray):
        """z ↦ ⟨Θ(g, ν, λ + N z)_ν, l⟩ − ε."""
        simple, l, n = rtube.simple, rtube.splitting.l, rtube.splitting.n

        def residual(z: np.ndarray) -> np.ndarray:
            point = SimpleTubeService.evaluate_embedded(simple, g, nu_hat, lam_full + n @ z)
            return l.T @ point.nu - eps

        return residual

    @staticmethod
    def solve_zeta(rtube: RestrictedTube, nu_hat: np.ndarray, lam_full: np.ndarray, eps: np.ndarray) -> np.ndarray:
        """
        Coordenadas de ζ ∈ n (base splitting.n).

        Raises:
            NewtonNonConvergenceError: resíduo final ≥ NEWTON_ACCEPT_TOL
        """
        k = rtube.splitting.l.shape[1]
        if k == 0:
            return np.zeros(0)

        g = np.eye(rtube.descriptor.matrix_size)
        residual = RestrictedTubeService.zeta_residual(rtube, g, nu_hat, lam_full, eps)
        singular = np.linalg.svd(rtube.sigma.matrix, compute_uv=False)
        config = rtube.newton
        result = damped_newton(
            residual,
            np.zeros(k),
            tol=config.tol,
            max_iter=config.max_iter,
            trust_radius=config.trust_factor * singular[-1] / singular[0],
            initial_jacobian=rtube.sigma.matrix,
        )
        if result.residual_norm >= config.accept_tol:
            logger.warning(
                "Newton do tubo restrito sem convergência: ε=%s resíduo=%.3e", eps, result.residual_norm,
            )
            raise NewtonNonConvergenceError(result.iterations, result.residual_norm)
        return result.x

    @staticmethod
    def _so3_closed(rtube: RestrictedTube, g: np.ndarray, nu_hat: np.ndarray, eps: np.ndarray) -> CotangentGroupPoint:
        """
        Φ = (g exp(r n̂), exp(−r n̂)(ν+μ)), n̂ = ξ_h × μ̂,
        r = arcsin(⟨ε, ξ_h⟩ ‖μ‖ / ⟨ν+μ, μ⟩).
        """
        mu = rtube.mu
        xi_h = rtube.splitting.l[:, 0]
        mu_norm = float(np.linalg.norm(mu))
        argument = float(eps[0]) * mu_norm / float((nu_hat + mu) @ mu)
        if abs(argument) >= 1.0:
            raise ClosedFormDomainError("arcsin", argument)
        r = math.asin(argument)
        axis = np.cross(xi_h, mu / mu_norm)
        E = AlgebraService.rodrigues(r * axis)
        return CotangentGroupPoint(np.asarray(g, dtype=float) @ E, E.T @ (nu_hat + mu))

    @staticmethod
    def restricted_tube_eval(
        rtube: RestrictedTube,
        g: np.ndarray,
        nu: np.ndarray,
        lam: np.ndarray,
        eps: np.ndarray,
    ) -> CotangentGroupPoint:
        """
        Φ(g, ν, λ; ε).

        Args:
            rtube: Tubo restrito
            g: Matriz do grupo
            nu: coordenadas de ν na base dual de g_μ
            lam: coordenadas de λ na base de o
            eps: coordenadas de ε na base dual de l

        Raises:
            RadiusViolationError / ClosedFormDomainError / NewtonNonConvergenceError
        """
        nu, lam, eps = RestrictedTubeService._check_inputs(rtube, nu, lam, eps)
        nu_hat = SimpleTubeService.embed_nu(rtube.simple, nu)
        return RestrictedTubeService.evaluate_embedded(rtube, g, nu_hat, lam, eps)

    @staticmethod
    def evaluate_embedded(
        rtube: RestrictedTube,
        g: np.ndarray,
        nu_hat: np.ndarray,
        lam: np.ndarray,
        eps: np.ndarray,
    ) -> CotangentGroupPoint:
        """Φ com ν̂ ∈ q° já mergulhado; λ e ε em coordenadas de o e l*, sem checagem de raios."""
        eps = np.asarray(eps, dtype=float)
        if rtube.strategy == RestrictedTubeStrategy.SO3_CLOSED and rtube.splitting.o.shape[1] == 0:
            return RestrictedTubeService._so3_closed(rtube, g, nu_hat, eps)

        lam_full = rtube.splitting.o @ lam
        zeta = RestrictedTubeService.solve_zeta(rtube, nu_hat, lam_full, eps)
        return SimpleTubeService.evaluate_embedded(
            rtube.simple, g, nu_hat, lam_full + rtube.splitting.n @ zeta,
        )

    @staticmethod
    def restricted_momentum_residual(rtube: RestrictedTube, point: CotangentGroupPoint, eps: np.ndarray) -> float:
        """‖J_R(Φ)|_l + ε‖."""
        l = rtube.splitting.l
        if l.shape[1] == 0:
            return 0.0
        return float(np.linalg.norm(-(l.T @ point.nu) + np.asarray(eps, dtype=float)))
