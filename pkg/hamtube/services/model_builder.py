"""
Model Builder - Construção de modelos cotangentes certificados.

Dois construtores:
    so3r3    SO(3) em R³ a partir de (q, p): H = SO(2) em torno de q̂,
             S = span q̂ com ação trivial, α = ⟨p, q̂⟩
    generic  (grupo, μ, geradores de h, representação de h em S, α)
"""
import logging
from dataclasses import replace
from typing import Optional

import numpy as np

from core.domain import ModelConfig, PreconditionError
from core.utils.policy import policy
from gtubes.domain import NewtonConfig, TubeRadii
from gtubes.services import RestrictedTubeService
from hamtube.domain import CotangentModel, ModelKind
from lie.domain import GroupDescriptor, Representation, validate_dimension, validate_representation
from lie.services import GroupRegistry
from splitting.services import SliceService, SplittingService

logger = logging.getLogger(__name__)

_NEWTON_FIELDS = {
    'NEWTON_TOL': 'tol',
    'NEWTON_ACCEPT_TOL': 'accept_tol',
    'NEWTON_MAX_ITER': 'max_iter',
    'NEWTON_TRUST_FACTOR': 'trust_factor',
}


class ModelBuilder:
    """
    Fábrica de CotangentModel.
    """

    @staticmethod
    def from_config(config: ModelConfig) -> CotangentModel:
        """
        Constrói o modelo descrito por uma configuração validada.

        Raises:
            ConfigSchemaError: grupo desconhecido
            PreconditionError / CertificationError: dados geométricos inválidos
        """
        newton = NewtonConfig.from_settings()
        if config.tolerances:
            newton = replace(newton, **{
                _NEWTON_FIELDS[key]: (int(value) if key == 'NEWTON_MAX_ITER' else float(value))
                for key, value in config.tolerances.items()
            })

        if config.kind == ModelKind.SO3R3.value:
            model = ModelBuilder.so3r3(
                config.q, config.p, name=config.name, factor=config.radius_factor, newton=newton,
            )
        else:
            model = ModelBuilder.generic(
                GroupRegistry.get(config.group),
                mu=config.mu,
                h=config.h.T if config.h.size else np.zeros((config.mu.shape[0], 0)),
                matrices=config.representation,
                alpha=config.alpha,
                name=config.name,
                factor=config.radius_factor,
                newton=newton,
            )

        if config.radii:
            model = replace(model, radii=replace(model.radii, **config.radii))
            model = replace(model, restricted=replace(model.restricted, radii=model.radii))
        return model

    @staticmethod
    def so3r3(
        q: np.ndarray,
        p: np.ndarray,
        name: str = 'so3r3',
        factor: Optional[float] = None,
        newton: Optional[NewtonConfig] = None,
    ) -> CotangentModel:
        """
        Modelo de SO(3) agindo em R³ no ponto (q, p).

        Raises:
            PreconditionError: q = 0 ou μ = q × p = 0
        """
        descriptor = GroupRegistry.so3()
        q = validate_dimension("q", q, 3)
        p = validate_dimension("p", p, 3)
        q_norm = float(np.linalg.norm(q))
        mu = np.cross(q, p)
        if q_norm == 0.0 or np.linalg.norm(mu) <= 1e-12 * q_norm * max(1.0, float(np.linalg.norm(p))):
            raise PreconditionError("μ = q × p ≠ 0")

        q_hat = q / q_norm
        representation = Representation(q_hat[:, None], np.zeros((1, 1, 1)))
        alpha = np.array([float(p @ q_hat)])
        model = ModelBuilder._assemble(
            name, ModelKind.SO3R3, descriptor, mu, q_hat[:, None], representation, alpha,
            metric=np.eye(3), slice_scale=q_norm, factor=factor, newton=newton,
        )
        return replace(model, q=q, p=p)

    @staticmethod
    def generic(
        descriptor: GroupDescriptor,
        mu: np.ndarray,
        h: np.ndarray,
        matrices: np.ndarray,
        alpha: np.ndarray,
        name: str = 'generic',
        factor: Optional[float] = None,
        newton: Optional[NewtonConfig] = None,
    ) -> CotangentModel:
        """
        Modelo genérico: h (n, k) e matrizes (k, m, m) da ação de h em S = R^m.

        Raises:
            PreconditionError: μ|_h ≠ 0 ou h não subálgebra
            InvalidRepresentationError: comutadores inconsistentes
        """
        mu = validate_dimension("μ", mu, descriptor.dimension)
        h = np.asarray(h, dtype=float).reshape(descriptor.dimension, -1)
        alpha = np.asarray(alpha, dtype=float)
        matrices = np.asarray(matrices, dtype=float).reshape(h.shape[1], alpha.shape[0], alpha.shape[0])
        representation = Representation(h, matrices)
        validate_representation(descriptor, representation, policy('CERTIFICATION_TOL'))

        scale = float(np.linalg.norm(mu)) or float(np.linalg.norm(alpha)) or 1.0
        return ModelBuilder._assemble(
            name, ModelKind.GENERIC, descriptor, mu, h, representation, alpha,
            metric=None, slice_scale=scale, factor=factor, newton=newton,
        )

    @staticmethod
    def _assemble(
        name: str,
        kind: ModelKind,
        descriptor: GroupDescriptor,
        mu: np.ndarray,
        h: np.ndarray,
        representation: Representation,
        alpha: np.ndarray,
        metric: Optional[np.ndarray],
        slice_scale: float,
        factor: Optional[float],
        newton: Optional[NewtonConfig],
    ) -> CotangentModel:
        # 1. μ ∈ h°: o ponto base (e, μ, 0, α) tem momento J_{H^T} nulo
        restriction = float(np.max(np.abs(h.T @ mu))) if h.shape[1] else 0.0
        if restriction > policy('CERTIFICATION_TOL') * max(1.0, float(np.linalg.norm(mu))):
            raise PreconditionError("μ|_h = 0", restriction)

        # 2. Splitting adaptado e fatia simplética
        splitting = SplittingService.adapted_splitting(descriptor, h, mu, metric=metric)
        slice_data = SliceService.slice_data(splitting, representation, alpha)

        # 3. Raios e tubo restrito
        mu_scale = float(np.linalg.norm(mu)) or slice_scale
        radii = TubeRadii.scaled(mu_scale, slice_scale, factor)
        restricted = RestrictedTubeService.from_splitting(splitting, radii, newton)

        model = CotangentModel(
            name=name,
            kind=kind,
            descriptor=descriptor,
            mu=mu,
            h=splitting.h,
            representation=representation,
            alpha=alpha,
            splitting=splitting,
            slice_data=slice_data,
            restricted=restricted,
            radii=radii,
        )
        logger.info("Modelo '%s' construído: %s", name, model.dimensions)
        return model
