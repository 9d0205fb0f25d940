"""
Simple Tube Service - Tubos simples Θ(g, ν, λ) = (g E, Ad*_E(ν + μ)).

E = exp(m₁(ν,λ)·λ); ν ∈ g_μ* é mergulhado como ν̂ ∈ g* anulando q.

Estratégias para m₁:
    SHIFT          μ = 0, E = e
    SO3_CLOSED     m₁ = ℱ(‖λ‖²/4b)/√b
    SL2_ELLIPTIC   idem com a forma traço
    SL2_NILPOTENT  m₁ = ℰ(−tr(ad_λ|_q))
    GENERIC        m₁ pela equação escalar (MoserService)
com b = ⟨ν̂+μ, μ♯⟩/⟨μ, μ♯⟩.
"""
import logging
import math
from typing import Optional

import numpy as np

from core.domain.exceptions import DimensionMismatchError, UnsupportedConfigurationError
from core.utils.linalg_utils import dual_embedding, null_space, subspace_angle
from gtubes.domain import (
    ClosedFormDomainError,
    CotangentGroupPoint,
    SimpleTube,
    SimpleTubeStrategy,
    TubeRadii,
    validate_radius,
)
from lie.domain import GroupDescriptor, validate_dimension
from lie.services import AlgebraService
from lie.services.group_registry import SL2_H, SL2_Y
from specialfn.services import MoserService, SpecialFunctionService
from splitting.domain import AdaptedSplitting
from splitting.services import SplittingService

logger = logging.getLogger(__name__)

_NULL_TOL = 1e-12


class SimpleTubeService:
    """
    Construção e avaliação de tubos simples.
    """

    # ------------------------------------------------------------------
    # Construtores
    # ------------------------------------------------------------------

    @staticmethod
    def shift_tube(descriptor: GroupDescriptor, mu: np.ndarray) -> SimpleTube:
        """(g, ν) ↦ (g, ν + μ) com g_μ = g, q = 0."""
        n = descriptor.dimension
        return SimpleTube(
            descriptor=descriptor,
            mu=np.asarray(mu, dtype=float),
            gmu=np.eye(n),
            q=np.zeros((n, 0)),
            strategy=SimpleTubeStrategy.SHIFT,
        )

    @staticmethod
    def so3_simple_tube(descriptor: GroupDescriptor, mu: np.ndarray) -> SimpleTube:
        """
        Tubo simples fechado de SO(3): g_μ = span μ, q = μ^⊥.

        μ = 0 devolve o tubo de deslocamento.
        """
        mu = validate_dimension("μ", mu, descriptor.dimension)
        if np.linalg.norm(mu) == 0.0:
            return SimpleTubeService.shift_tube(descriptor, mu)
        return SimpleTube(
            descriptor=descriptor,
            mu=mu,
            gmu=SplittingService.isotropy_algebra(descriptor, mu),
            q=null_space(mu[None, :]),
            strategy=SimpleTubeStrategy.SO3_CLOSED,
        )

    @staticmethod
    def sl2_simple_tube(descriptor: GroupDescriptor, mu: np.ndarray) -> SimpleTube:
        """
        Tubo simples fechado de SL(2,R) nos três casos:
            μ = 0            deslocamento
            ‖μ‖² ≠ 0         q = ker μ, fórmula com ℱ
            ‖μ‖² = 0, μ ≠ 0  q = span(kHk⁻¹, kYk⁻¹), fórmula com ℰ
        """
        mu = validate_dimension("μ", mu, descriptor.dimension)
        scale = float(np.linalg.norm(mu))
        if scale == 0.0:
            return SimpleTubeService.shift_tube(descriptor, mu)

        gmu = SplittingService.isotropy_algebra(descriptor, mu)
        norm2 = AlgebraService.form_norm2_coalgebra(descriptor, mu)
        if abs(norm2) > _NULL_TOL * scale * scale:
            return SimpleTube(
                descriptor=descriptor,
                mu=mu,
                gmu=gmu,
                q=null_space(mu[None, :]),
                strategy=SimpleTubeStrategy.SL2_ELLIPTIC,
            )

        k = SimpleTubeService.nilpotent_conjugator(descriptor, mu)
        k_inv = np.linalg.inv(k)
        q = np.column_stack([
            descriptor.from_matrix(k @ SL2_H @ k_inv),
            descriptor.from_matrix(k @ SL2_Y @ k_inv),
        ])
        return SimpleTube(
            descriptor=descriptor,
            mu=mu,
            gmu=gmu,
            q=q,
            strategy=SimpleTubeStrategy.SL2_NILPOTENT,
        )

    @staticmethod
    def nilpotent_conjugator(descriptor: GroupDescriptor, mu: np.ndarray) -> np.ndarray:
        """
        k ∈ SL(2,R) com M_μ = k [[0, s], [0, 0]] k⁻¹.

        k = [u | v], u unitário gerando a imagem de M_μ e v = (−u₂, u₁).
        """
        M = AlgebraService.matrix_from_covector(descriptor, mu)
        column = int(np.argmax(np.linalg.norm(M, axis=0)))
        u = M[:, column] / np.linalg.norm(M[:, column])
        v = np.array([-u[1], u[0]])
        return np.column_stack([u, v])

    @staticmethod
    def from_splitting(splitting: AdaptedSplitting, radii: Optional[TubeRadii] = None) -> SimpleTube:
        """
        Tubo simples sobre q = o ⊕ l ⊕ n de um splitting adaptado.

        Usa a fórmula fechada quando q coincide com o q da fórmula; caso
        contrário o caminho genérico (exige dim q = 2).

        Raises:
            UnsupportedConfigurationError: dim q ∉ {0, 2} sem fórmula fechada
        """
        descriptor, mu = splitting.descriptor, splitting.mu
        radii = radii or TubeRadii()
        q = splitting.q
        if q.shape[1] == 0:
            return SimpleTube(descriptor, mu, splitting.gmu, q, SimpleTubeStrategy.SHIFT, radii)

        closed = None
        if descriptor.name == 'so3':
            closed = SimpleTubeService.so3_simple_tube(descriptor, mu)
        elif descriptor.name == 'sl2r':
            closed = SimpleTubeService.sl2_simple_tube(descriptor, mu)
        if closed is not None and subspace_angle(closed.q, q) < 1e-10:
            strategy = closed.strategy
        elif q.shape[1] == 2:
            strategy = SimpleTubeStrategy.GENERIC
        else:
            raise UnsupportedConfigurationError(f"tubo simples genérico exige dim q = 2 (recebido {q.shape[1]})")

        return SimpleTube(
            descriptor=descriptor,
            mu=mu,
            gmu=splitting.gmu,
            q=q,
            strategy=strategy,
            radii=radii,
        )

    @staticmethod
    def as_generic(tube: SimpleTube) -> SimpleTube:
        """Mesmo tubo forçando o caminho numérico de m₁."""
        if tube.q.shape[1] != 2:
            raise UnsupportedConfigurationError("caminho genérico exige dim q = 2")
        return SimpleTube(tube.descriptor, tube.mu, tube.gmu, tube.q, SimpleTubeStrategy.GENERIC, tube.radii)

    # ------------------------------------------------------------------
    # Avaliação
    # ------------------------------------------------------------------

    @staticmethod
    def embed_nu(tube: SimpleTube, nu: np.ndarray) -> np.ndarray:
        """ν ∈ g_μ* (coordenadas na base dual de gmu) ↦ ν̂ ∈ q°."""
        nu = np.atleast_1d(np.asarray(nu, dtype=float))
        if nu.shape != (tube.nu_dimension,):
            raise DimensionMismatchError("ν ∈ g_μ*", tube.nu_dimension, nu.shape)
        return dual_embedding(tube.gmu, tube.q) @ nu

    @staticmethod
    def b_factor(tube: SimpleTube, nu_hat: np.ndarray) -> float:
        descriptor = tube.descriptor
        mu_sharp = AlgebraService.sharp(descriptor, tube.mu)
        return float((nu_hat + tube.mu) @ mu_sharp) / float(tube.mu @ mu_sharp)

    @staticmethod
    def scaling_factor(tube: SimpleTube, nu_hat: np.ndarray, lam: np.ndarray) -> float:
        """
        m₁(ν, λ) pela estratégia do tubo.

        Raises:
            ClosedFormDomainError: b ≤ 0 ou argumento de ℱ ≥ 1
            NoRootInBracketError: caminho genérico sem raiz
        """
        strategy, descriptor = tube.strategy, tube.descriptor
        if strategy == SimpleTubeStrategy.SHIFT or not np.any(lam):
            return 1.0

        if strategy in (SimpleTubeStrategy.SO3_CLOSED, SimpleTubeStrategy.SL2_ELLIPTIC):
            b = SimpleTubeService.b_factor(tube, nu_hat)
            if b <= 0:
                raise ClosedFormDomainError("μ/(μ+ν) > 0", b)
            x = AlgebraService.form_norm2_algebra(descriptor, lam) / (4.0 * b)
            if x >= 1.0:
                raise ClosedFormDomainError("ℱ(x), x < 1", x)
            return SpecialFunctionService.eval_F(x) / math.sqrt(b)

        if strategy == SimpleTubeStrategy.SL2_NILPOTENT:
            return SpecialFunctionService.eval_E(-MoserService.restricted_trace(descriptor, tube.q, lam))

        # gmuᵀ ν̂ recupera as coordenadas duais de ν
        return MoserService.solve_m1(descriptor, tube.mu, tube.gmu, tube.q, tube.gmu.T @ nu_hat, lam)

    @staticmethod
    def group_factor(tube: SimpleTube, nu_hat: np.ndarray, lam: np.ndarray) -> np.ndarray:
        """E(ν, λ) = exp(m₁·λ)."""
        m1 = SimpleTubeService.scaling_factor(tube, nu_hat, lam)
        return AlgebraService.exp(tube.descriptor, tube.exponent_scale * m1 * lam)

    @staticmethod
    def evaluate_embedded(
        tube: SimpleTube,
        g: np.ndarray,
        nu_hat: np.ndarray,
        lam: np.ndarray,
    ) -> CotangentGroupPoint:
        """Θ com ν já mergulhado em g*; λ em coordenadas de g."""
        E = SimpleTubeService.group_factor(tube, nu_hat, lam)
        momentum = AlgebraService.Adstar(tube.descriptor, E, nu_hat + tube.mu)
        return CotangentGroupPoint(np.asarray(g, dtype=float) @ E, momentum)

    @staticmethod
    def simple_tube_eval(
        tube: SimpleTube,
        g: np.ndarray,
        nu: np.ndarray,
        lam: np.ndarray,
    ) -> CotangentGroupPoint:
        """
        Θ(g, ν, λ) = (g E(ν,λ), Ad*_{E(ν,λ)}(ν + μ)).

        Args:
            tube: Tubo simples
            g: Matriz do grupo
            nu: coordenadas de ν na base dual de g_μ
            lam: coordenadas de λ na base de q

        Raises:
            RadiusViolationError / ClosedFormDomainError / NoRootInBracketError
        """
        nu = np.atleast_1d(np.asarray(nu, dtype=float))
        lam = np.atleast_1d(np.asarray(lam, dtype=float))
        if lam.shape != (tube.lam_dimension,):
            raise DimensionMismatchError("λ ∈ q", tube.lam_dimension, lam.shape)
        validate_radius('nu', nu, tube.radii.nu)
        validate_radius('lambda', lam, tube.radii.lam)

        nu_hat = SimpleTubeService.embed_nu(tube, nu)
        return SimpleTubeService.evaluate_embedded(tube, g, nu_hat, tube.q @ lam)
