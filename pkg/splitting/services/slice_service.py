"""
Slice Service - Dados da fatia simplética e momento da fatia.

Dado o splitting adaptado, a representação de h em S e α ∈ S*:
    B    = (h_μ·α)° ⊂ S
    g_z  = {ξ ∈ h_μ : ξ·α = 0}
    s    = complemento de g_z em h_μ
    C    = complemento G_z-invariante de B em S
com ξ·β = −A(ξ)ᵀβ em S*.
"""
import logging
from dataclasses import replace
from typing import Optional

import numpy as np

from core.domain.exceptions import DimensionMismatchError
from core.utils.linalg_utils import (
    canonical,
    dual_embedding,
    metric_complement,
    null_space,
    projection_residual,
    rank,
)
from core.utils.policy import policy
from lie.domain import Representation
from lie.services import AlgebraService
from splitting.domain import AdaptedSplitting, CertificationError, SymplecticSliceData

logger = logging.getLogger(__name__)

_INVARIANCE_SAMPLES = 8


class SliceService:
    """
    Construção da fatia N = o × B × B* e do momento J_N.
    """

    @staticmethod
    def representation_metric(splitting: AdaptedSplitting, representation: Representation) -> np.ndarray:
        """
        Produto interno em S invariante por H_μ.

        Identidade para representações ortogonais; média sobre amostras
        de H_μ caso contrário.
        """
        m = representation.dimension
        if representation.is_orthogonal() or splitting.hmu.shape[1] == 0:
            return np.eye(m)
        metric = np.zeros((m, m))
        count = 0
        for j in range(splitting.hmu.shape[1]):
            xi = splitting.hmu[:, j]
            period = AlgebraService.circle_period(splitting.descriptor, xi)
            times = np.arange(policy('METRIC_SAMPLES')) * (period if np.isfinite(period) else 1.0) / policy('METRIC_SAMPLES')
            for t in times:
                action = AlgebraService.group_action(representation, t * xi)
                metric += action.T @ action
                count += 1
        return metric / count

    @staticmethod
    def slice_data(
        splitting: AdaptedSplitting,
        representation: Representation,
        alpha: np.ndarray,
        metric: Optional[np.ndarray] = None,
    ) -> SymplecticSliceData:
        """
        Constrói e certifica os dados da fatia.

        Raises:
            DimensionMismatchError: α fora de S*
            CertificationError: B, S = B ⊕ C ou invariância de C falharam
        """
        m = representation.dimension
        alpha = np.asarray(alpha, dtype=float)
        if alpha.shape != (m,):
            raise DimensionMismatchError("α ∈ S*", m, alpha.shape)

        hmu = splitting.hmu
        k = hmu.shape[1]

        # 1. V = [ξ_j·α], B = (h_μ·α)°, g_z = (h_μ)_α
        V = np.column_stack([representation.dual_action(hmu[:, j]) @ alpha for j in range(k)]) if k else np.zeros((m, 0))
        B = null_space(V.T) if k else np.eye(m)
        coefficients = null_space(V)
        gz = canonical(hmu @ coefficients) if coefficients.shape[1] else np.zeros((hmu.shape[0], 0))

        # 2. h_μ = g_z ⊕ s
        s = metric_complement(gz, splitting.metric, within=hmu) if k else np.zeros((hmu.shape[0], 0))

        # 3. S = B ⊕ C
        if metric is None:
            metric = SliceService.representation_metric(splitting, representation)
        C = metric_complement(B, metric)
        b_embedding = dual_embedding(B, C)

        data = SymplecticSliceData(
            representation=representation,
            alpha=alpha,
            B=B,
            C=C,
            b_embedding=b_embedding,
            gz=gz,
            s=s,
            gmu_ordered=np.hstack([gz, s, splitting.p]),
            metric=metric,
        )
        residuals = SliceService.certify(splitting, data)
        logger.info(
            "Fatia construída: dim B=%d, dim C=%d, dim g_z=%d, dim s=%d",
            B.shape[1], C.shape[1], gz.shape[1], s.shape[1],
        )
        return replace(data, residuals=residuals)

    @staticmethod
    def certify(splitting: AdaptedSplitting, data: SymplecticSliceData) -> dict:
        tol = policy('CERTIFICATION_TOL')
        representation = data.representation
        m = representation.dimension
        residuals = {}

        annihilator = [
            abs(float((representation.dual_action(splitting.hmu[:, j]) @ data.alpha) @ data.B[:, i]))
            for j in range(splitting.hmu.shape[1]) for i in range(data.B.shape[1])
        ]
        residuals['B_annihilator'] = max(annihilator, default=0.0)
        residuals['S_direct_sum'] = float(m - rank(np.hstack([data.B, data.C])))
        residuals['gmu_ordered'] = float(splitting.gmu.shape[1] - rank(data.gmu_ordered))

        invariance = 0.0
        if data.gz.shape[1] and data.C.shape[1]:
            for j in range(data.gz.shape[1]):
                for t in np.linspace(0.0, 2 * np.pi, _INVARIANCE_SAMPLES, endpoint=False)[1:]:
                    action = AlgebraService.group_action(representation, t * data.gz[:, j])
                    invariance = max(invariance, projection_residual(data.C, action @ data.C))
        residuals['C_invariance'] = invariance

        scale = max(1.0, float(np.linalg.norm(data.alpha)))
        for invariant, residual in residuals.items():
            if residual > tol * scale:
                raise CertificationError(invariant, residual, tol * scale)
        return residuals

    # ------------------------------------------------------------------
    # Momentos quadráticos
    # ------------------------------------------------------------------

    @staticmethod
    def quadratic_momentum(
        splitting: AdaptedSplitting,
        representation: Representation,
        lam: np.ndarray,
        a: np.ndarray,
        b: np.ndarray,
        basis: np.ndarray,
    ) -> np.ndarray:
        """
        ½ λ⋄ad*_λμ + a⋄b restrito a span(basis) ⊂ h_μ.

        Coordenada j: ½⟨μ, [λ, [η_j, λ]]⟩ + ⟨b, η_j·a⟩, com a ∈ S, b ∈ S*.
        """
        descriptor, mu = splitting.descriptor, splitting.mu
        values = []
        for j in range(basis.shape[1]):
            eta = basis[:, j]
            inner = AlgebraService.bracket(descriptor, eta, lam)
            orbit_term = 0.5 * float(mu @ AlgebraService.bracket(descriptor, lam, inner))
            values.append(orbit_term + float(b @ representation.action(eta) @ a))
        return np.array(values)

    @staticmethod
    def slice_momentum(
        splitting: AdaptedSplitting,
        data: SymplecticSliceData,
        lam: np.ndarray,
        a: np.ndarray,
        beta: np.ndarray,
        basis: Optional[np.ndarray] = None,
    ) -> np.ndarray:
        """
        J_N(λ, a, β) = ½ λ⋄_{g_z} ad*_λ μ + a ⋄_{g_z} β.

        a, β em coordenadas de B e B*; basis padrão g_z.
        """
        basis = data.gz if basis is None else basis
        return SliceService.quadratic_momentum(
            splitting, data.representation, lam, data.embed_a(a), data.embed_b(beta), basis,
        )

    @staticmethod
    def slice_form(splitting: AdaptedSplitting, data: SymplecticSliceData) -> np.ndarray:
        """
        Matriz de Ω_N em coordenadas (λ ∈ o, a ∈ B, β ∈ B*):
            Ω_N((λ₁,a₁,β₁),(λ₂,a₂,β₂)) = Ω^μ(λ₁,λ₂) + ⟨β₂,a₁⟩ − ⟨β₁,a₂⟩.
        """
        k, d = splitting.o.shape[1], data.slice_dimension
        form = np.zeros((k + 2 * d, k + 2 * d))
        form[:k, :k] = splitting.omega.restricted(splitting.o, splitting.o)
        form[k:k + d, k + d:] = np.eye(d)
        form[k + d:, k:k + d] = -np.eye(d)
        return form
