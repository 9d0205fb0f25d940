"""
Splitting Service - Construção e certificação do splitting adaptado.

Construção (métrica P Ad_H-invariante):
    g_μ = ker(ξ ↦ ad*_ξ μ)
    h_μ = h ∩ g_μ,   l = h ∩ g_μ^⊥
    o   = {λ ∈ g_μ^⊥ ∩ h^⊥ : Ω^μ(λ, η) = 0 ∀η ∈ h}
    W   = o^ω ∩ g_μ^⊥ (contém l como lagrangiano)
    n   = J·l, J estrutura complexa ortogonal de Ω^μ|_W
    p   = g_μ ∩ h_μ^⊥

Toda invariante é re-verificada antes do retorno.
"""
import logging
from dataclasses import replace
from typing import Dict, Optional

import numpy as np

from core.domain.exceptions import PreconditionError
from core.utils.linalg_utils import (
    canonical,
    intersect,
    metric_complement,
    metric_orthonormalize,
    null_space,
    projection_residual,
    rank,
)
from core.utils.policy import policy
from lie.domain import GroupDescriptor, validate_dimension
from lie.services import AlgebraService
from splitting.domain import (
    AdaptedSplitting,
    CertificationError,
    IllConditionedKernelError,
    OmegaForm,
    SigmaMap,
    SingularSigmaError,
)

logger = logging.getLogger(__name__)

# Amostras de H_μ na verificação de invariância
_INVARIANCE_SAMPLES = 8


class SplittingService:
    """
    Serviço de splittings adaptados.
    """

    # ------------------------------------------------------------------
    # Isotropia e métrica
    # ------------------------------------------------------------------

    @staticmethod
    def isotropy_algebra(descriptor: GroupDescriptor, mu: np.ndarray) -> np.ndarray:
        """
        Base ortonormal de g_μ.

        Raises:
            IllConditionedKernelError: valores singulares na faixa
                (tol, RANK_GAP_FACTOR·tol], sem salto de posto claro
        """
        mu = validate_dimension("μ", mu, descriptor.dimension)
        n = descriptor.dimension
        matrix = AlgebraService.coad_matrix(descriptor, mu)
        _, singular, vt = np.linalg.svd(matrix)
        if singular[0] == 0.0:
            return np.eye(n)

        tol = policy('RANK_RTOL') * singular[0]
        gray = singular[(singular > tol) & (singular <= policy('RANK_GAP_FACTOR') * tol)]
        if gray.size:
            raise IllConditionedKernelError(singular, tol)

        kernel = canonical(vt[singular <= tol].T)
        return SplittingService._orient_by_mu(kernel, mu)

    @staticmethod
    def _orient_by_mu(basis: np.ndarray, mu: np.ndarray) -> np.ndarray:
        """Sinal de cada coluna com ⟨μ, v⟩ > 0 quando não nulo."""
        basis = basis.copy()
        threshold = 1e-12 * max(1.0, float(np.linalg.norm(mu)))
        for j in range(basis.shape[1]):
            if mu @ basis[:, j] < -threshold:
                basis[:, j] *= -1
        return basis

    @staticmethod
    def invariant_metric(descriptor: GroupDescriptor, h: np.ndarray) -> np.ndarray:
        """
        Produto interno Ad_H-invariante em g.

        A identidade quando já é invariante (SO(3), h trivial); caso
        contrário, média de Ad_hᵀ Ad_h numa grade de METRIC_SAMPLES
        elementos de cada subgrupo a um parâmetro gerado por h.

        Raises:
            PreconditionError: média não invariante (H não compacto)
        """
        n = descriptor.dimension
        identity = np.eye(n)
        if h.shape[1] == 0:
            return identity
        if SplittingService.metric_invariance_residual(descriptor, identity, h) < 1e-12:
            return identity

        samples = AlgebraService.subgroup_samples(descriptor, h, policy('METRIC_SAMPLES'))
        metric = np.zeros((n, n))
        for g in samples:
            Ad = AlgebraService.Ad_matrix(descriptor, g, validate=False)
            metric += Ad.T @ Ad
        metric /= len(samples)
        metric = 0.5 * (metric + metric.T)

        residual = SplittingService.metric_invariance_residual(descriptor, metric, h)
        if residual > policy('CERTIFICATION_TOL'):
            raise PreconditionError("métrica Ad_H-invariante por média (H compacto)", residual)
        logger.debug("Métrica invariante por média sobre %d amostras", len(samples))
        return metric

    @staticmethod
    def metric_invariance_residual(descriptor: GroupDescriptor, metric: np.ndarray, generators: np.ndarray) -> float:
        """max |Ad_hᵀ P Ad_h − P| / ‖P‖ em amostras de exp(t ξ_j)."""
        residual = 0.0
        scale = float(np.max(np.abs(metric)))
        for g in AlgebraService.subgroup_samples(descriptor, generators, _INVARIANCE_SAMPLES):
            Ad = AlgebraService.Ad_matrix(descriptor, g, validate=False)
            residual = max(residual, float(np.max(np.abs(Ad.T @ metric @ Ad - metric))) / scale)
        return residual

    # ------------------------------------------------------------------
    # Splitting adaptado
    # ------------------------------------------------------------------

    @staticmethod
    def check_preconditions(descriptor: GroupDescriptor, h: np.ndarray, mu: np.ndarray) -> None:
        """
        h subálgebra e [h, h] ⊂ ⟨μ⟩°.

        Raises:
            PreconditionError
        """
        tol = policy('CERTIFICATION_TOL')
        scale = max(1.0, float(np.linalg.norm(mu)))
        closure, annihilation = 0.0, 0.0
        for i in range(h.shape[1]):
            for j in range(i + 1, h.shape[1]):
                bracket = AlgebraService.bracket(descriptor, h[:, i], h[:, j])
                closure = max(closure, projection_residual(h, bracket[:, None]))
                annihilation = max(annihilation, abs(float(mu @ bracket)))
        if closure > tol:
            raise PreconditionError("h é subálgebra", closure)
        if annihilation > tol * scale:
            raise PreconditionError("[h, h] anula μ", annihilation)

    @staticmethod
    def adapted_splitting(
        descriptor: GroupDescriptor,
        h: np.ndarray,
        mu: np.ndarray,
        metric: Optional[np.ndarray] = None,
    ) -> AdaptedSplitting:
        """
        Constrói e certifica g = g_μ ⊕ o ⊕ l ⊕ n.

        Args:
            descriptor: Grupo
            h: base (n, k) da subálgebra h
            mu: μ ∈ g*
            metric: produto interno Ad_H-invariante (construído se None)

        Raises:
            PreconditionError: h não subálgebra, [h,h] ⊄ ⟨μ⟩°, métrica não invariante
            IllConditionedKernelError: g_μ mal condicionado
            CertificationError: alguma invariante falhou
        """
        mu = validate_dimension("μ", mu, descriptor.dimension)
        h = np.asarray(h, dtype=float).reshape(descriptor.dimension, -1)
        h = canonical(h) if h.shape[1] else h

        # 1. Pré-condições e métrica
        SplittingService.check_preconditions(descriptor, h, mu)
        if metric is None:
            metric = SplittingService.invariant_metric(descriptor, h)
        elif h.shape[1]:
            residual = SplittingService.metric_invariance_residual(descriptor, metric, h)
            if residual > policy('CERTIFICATION_TOL'):
                raise PreconditionError("métrica Ad_H-invariante", residual)

        # 2. Isotropia e forma Ω^μ
        gmu = SplittingService.isotropy_algebra(descriptor, mu)
        omega = OmegaForm.from_mu(descriptor, mu)
        gmu_perp = metric_complement(gmu, metric)

        # 3. h = h_μ ⊕ l
        hmu = SplittingService._orient_by_mu(intersect(h, gmu), mu)
        l_basis = intersect(h, gmu_perp)

        # 4. o: Ω^μ-ortogonal a h dentro de g_μ^⊥ ∩ h^⊥
        u = metric_complement(np.hstack([gmu, h]), metric)
        if u.shape[1] and h.shape[1]:
            coefficients = null_space(h.T @ omega.matrix.T @ u)
            o = canonical(u @ coefficients) if coefficients.shape[1] else np.zeros((descriptor.dimension, 0))
        else:
            o = u

        # 5. n = J·l dentro de W = o^ω ∩ g_μ^⊥
        n_basis = SplittingService._lagrangian_complement(omega, metric, gmu_perp, o, l_basis)

        # 6. g_μ = h_μ ⊕ p
        p = metric_complement(hmu, metric, within=gmu)

        splitting = AdaptedSplitting(
            descriptor=descriptor,
            mu=mu,
            h=h,
            gmu=gmu,
            hmu=hmu,
            o=o,
            l=l_basis,
            n=n_basis,
            p=p,
            metric=metric,
            omega=omega,
        )

        # 7. Certificação
        residuals = SplittingService.certify(splitting)
        splitting = replace(splitting, residuals=residuals)
        logger.info(
            "Splitting adaptado certificado (%s): %s",
            descriptor.name, splitting.dimensions,
        )
        return splitting

    @staticmethod
    def _lagrangian_complement(omega, metric, gmu_perp, o, l_basis) -> np.ndarray:
        n = gmu_perp.shape[0]
        if l_basis.shape[1] == 0:
            return np.zeros((n, 0))

        if o.shape[1]:
            coefficients = null_space(o.T @ omega.matrix @ gmu_perp)
            w = gmu_perp @ coefficients
        else:
            w = gmu_perp

        wb = metric_orthonormalize(w, metric)
        a = wb.T @ omega.matrix @ wb
        eigenvalues, eigenvectors = np.linalg.eigh(a.T @ a)
        if eigenvalues.size == 0 or eigenvalues[0] <= policy('RANK_RTOL') * max(eigenvalues[-1], 1e-300):
            raise CertificationError("Ω^μ não degenerada em o^ω", float(eigenvalues[0]) if eigenvalues.size else 0.0,
                                     policy('RANK_RTOL'))
        inverse_sqrt = eigenvectors @ np.diag(eigenvalues ** -0.5) @ eigenvectors.T
        complex_structure = a @ inverse_sqrt

        coords = wb.T @ metric @ l_basis
        return canonical(wb @ complex_structure @ coords)

    @staticmethod
    def certify(splitting: AdaptedSplitting) -> Dict[str, float]:
        """
        Re-verifica as invariantes do splitting.

        Returns:
            resíduo por invariante

        Raises:
            CertificationError: primeira invariante acima da tolerância
        """
        tol = policy('CERTIFICATION_TOL')
        scale = max(1.0, float(np.linalg.norm(splitting.mu)))
        omega = splitting.omega
        gmu, o, l_basis, n_basis, h, hmu = (
            splitting.gmu, splitting.o, splitting.l, splitting.n, splitting.h, splitting.hmu,
        )
        dimension = splitting.descriptor.dimension
        residuals = {}

        def _max_abs(matrix):
            return float(np.max(np.abs(matrix))) if matrix.size else 0.0

        def _smin(matrix):
            if matrix.size == 0:
                return np.inf
            return float(np.linalg.svd(matrix, compute_uv=False)[-1])

        # soma direta
        residuals['direct_sum'] = float(dimension - rank(splitting.frame))
        # g_μ no núcleo de Ω^μ
        residuals['gmu_kernel'] = _max_abs(omega.matrix @ gmu)
        # h = h_μ ⊕ l
        residuals['h_decomposition'] = max(
            float(abs(h.shape[1] - hmu.shape[1] - l_basis.shape[1])),
            projection_residual(h, np.hstack([hmu, l_basis])) if h.shape[1] else 0.0,
        )
        # Ω^μ|_o não degenerada
        smin_o = _smin(omega.restricted(o, o))
        residuals['o_nondegenerate'] = 0.0 if smin_o > policy('RANK_RTOL') * scale else 1.0
        # l e n isotrópicos, emparelhamento entre l e n não degenerado
        residuals['l_isotropic'] = _max_abs(omega.restricted(l_basis, l_basis))
        residuals['n_isotropic'] = _max_abs(omega.restricted(n_basis, n_basis))
        smin_ln = _smin(omega.restricted(l_basis, n_basis))
        residuals['ln_pairing'] = 0.0 if smin_ln > policy('RANK_RTOL') * scale else 1.0
        # o ⟂_Ω (l ⊕ n)
        residuals['o_orthogonal'] = _max_abs(omega.restricted(o, np.hstack([l_basis, n_basis])))
        # H_μ-invariância amostrada
        residuals['hmu_invariance'] = SplittingService.invariance_residual(splitting)

        for invariant, residual in residuals.items():
            threshold = tol * scale if invariant not in ('direct_sum', 'h_decomposition') else tol
            if residual > threshold:
                raise CertificationError(invariant, residual, threshold)
        return residuals

    @staticmethod
    def invariance_residual(splitting: AdaptedSplitting) -> float:
        """max distância de Ad_h(subespaço) ao subespaço, h ∈ H_μ amostrado."""
        if splitting.hmu.shape[1] == 0:
            return 0.0
        descriptor = splitting.descriptor
        residual = 0.0
        subspaces = [splitting.gmu, splitting.o, splitting.l, splitting.n, splitting.p]
        for g in AlgebraService.subgroup_samples(descriptor, splitting.hmu, _INVARIANCE_SAMPLES):
            Ad = AlgebraService.Ad_matrix(descriptor, g, validate=False)
            for basis in subspaces:
                if basis.shape[1]:
                    residual = max(residual, projection_residual(basis, Ad @ basis))
        return residual

    # ------------------------------------------------------------------
    # σ: n → l*
    # ------------------------------------------------------------------

    @staticmethod
    def sigma(splitting: AdaptedSplitting) -> SigmaMap:
        """
        Matriz de σ(ζ) = (ad*_ζ μ)|_l e seu número de condição.

        Raises:
            SingularSigmaError: menor valor singular ≤ 1e-8 · maior
        """
        descriptor, mu = splitting.descriptor, splitting.mu
        k = splitting.l.shape[1]
        if k == 0:
            return SigmaMap(np.zeros((0, 0)), 1.0)

        matrix = np.array([
            [mu @ AlgebraService.bracket(descriptor, splitting.n[:, i], splitting.l[:, j]) for i in range(k)]
            for j in range(k)
        ])
        singular = np.linalg.svd(matrix, compute_uv=False)
        condition = float(singular[0] / singular[-1]) if singular[-1] > 0 else np.inf
        if singular[-1] <= 1e-8 * singular[0]:
            raise SingularSigmaError(condition)
        return SigmaMap(matrix, condition)
