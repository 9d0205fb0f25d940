"""
Gamma Service - Γ(ν; b) ∈ C com Γ(ν; b) ⋄_s (b + α) = ν.

Em bases {ξ_j} de s e {c_i} de C o sistema é M x = ν com
M_ji = ⟨α + b, ξ_j·c_i⟩.
"""
import logging

import numpy as np

from core.domain.exceptions import DimensionMismatchError
from hamtube.domain import CotangentModel, SingularGammaError
from lie.services import AlgebraService

logger = logging.getLogger(__name__)

# Menor valor singular relativo aceito para M
_SINGULAR_RTOL = 1e-10


class GammaService:

    @staticmethod
    def gamma_matrix(model: CotangentModel, b: np.ndarray) -> np.ndarray:
        """M(b) com b em coordenadas de B*."""
        data = model.slice_data
        covector = model.alpha + data.embed_b(b)
        s, C = data.s, data.C
        if s.shape[1] != C.shape[1]:
            raise DimensionMismatchError("dim s = dim C", s.shape[1], C.shape[1])
        return np.array([
            [covector @ model.representation.action(s[:, j]) @ C[:, i] for i in range(C.shape[1])]
            for j in range(s.shape[1])
        ]).reshape(s.shape[1], C.shape[1])

    @staticmethod
    def gamma_eval(model: CotangentModel, nu: np.ndarray, b: np.ndarray) -> np.ndarray:
        """
        Γ(ν; b) como vetor de S.

        Args:
            model: Modelo cotangente
            nu: valores de ν ∈ s* na base s
            b: coordenadas de b ∈ B*

        Raises:
            SingularGammaError: M(b) singular
        """
        m = model.slice_dimension
        nu = np.asarray(nu, dtype=float)
        if nu.shape != (model.slice_data.s.shape[1],):
            raise DimensionMismatchError("ν ∈ s*", model.slice_data.s.shape[1], nu.shape)
        if nu.size == 0:
            return np.zeros(m)

        M = GammaService.gamma_matrix(model, b)
        singular = np.linalg.svd(M, compute_uv=False)
        scale = max(1.0, float(np.linalg.norm(model.alpha)))
        if singular[-1] <= _SINGULAR_RTOL * scale:
            logger.warning("Sistema de Γ singular para b=%s", b)
            raise SingularGammaError(float(singular[-1]))
        return model.slice_data.C @ np.linalg.solve(M, nu)

    @staticmethod
    def gamma_residual(model: CotangentModel, nu: np.ndarray, b: np.ndarray, gamma: np.ndarray) -> dict:
        """
        Resíduos do contrato de Γ:
            equation      ‖Γ ⋄_s (b + α) − ν‖
            C_membership  distância de Γ a C
        """
        data = model.slice_data
        covector = model.alpha + data.embed_b(b)
        diamond = AlgebraService.diamond(model.representation, gamma, covector, data.s)
        if data.C.shape[1]:
            coefficients, *_ = np.linalg.lstsq(data.C, gamma, rcond=None)
            membership = float(np.linalg.norm(data.C @ coefficients - gamma))
        else:
            membership = float(np.linalg.norm(gamma))
        return {
            'equation': float(np.linalg.norm(diamond - np.asarray(nu, dtype=float))) if diamond.size else 0.0,
            'C_membership': membership,
        }
