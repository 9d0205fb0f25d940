"""
Tube Target Service - Construção e avaliação dos tubos pedidos pela CLI.

Os componentes de cada tipo, na ordem da carta de verificação:
    simple      nu (g_μ*), lambda (q)
    restricted  nu (g_μ*), lambda (o), eps (l*)
    tube0       nu (p*), lambda (o), a (S), b (S*)
    general     nu (s* ⊕ p*), lambda (o), a (B), b (B*)
    so3r3       nu (g_μ*), a, b
"""
import logging
from typing import Dict, List, Optional, Tuple

import numpy as np

from core.domain import (
    ConfigSchemaError,
    DimensionMismatchError,
    ModelConfig,
    TargetKind,
    TubeTarget,
    UnsupportedConfigurationError,
)
from gtubes.services import RestrictedTubeService, SimpleTubeService
from hamtube.domain import ModelKind, ModelPoint, PhasePoint
from hamtube.services import HamiltonianTubeService, ModelBuilder
from lie.services import AlgebraService, GroupRegistry
from splitting.services import SplittingService
from verification.services import TubeChartService

logger = logging.getLogger(__name__)


class TubeTargetService:

    @staticmethod
    def build(
        kind: str,
        group: Optional[str] = None,
        mu: Optional[np.ndarray] = None,
        xi_h: Optional[np.ndarray] = None,
        model: Optional[str] = None,
    ) -> TubeTarget:
        """
        Raises:
            ConfigSchemaError: argumento obrigatório ausente ou modelo inválido
            PreconditionError / CertificationError: dados geométricos inválidos
        """
        kind = TargetKind(kind)

        if kind.needs_model:
            if not model:
                raise ConfigSchemaError('--model', f"obrigatório para --kind {kind.value}")
            cotangent = ModelBuilder.from_config(ModelConfig.from_source(model))
            if kind == TargetKind.SO3R3 and cotangent.kind != ModelKind.SO3R3:
                raise UnsupportedConfigurationError(f"--kind so3r3 exige um modelo so3r3 (recebido {cotangent.name})")
            return TubeTarget(kind, cotangent)

        if group is None or mu is None:
            raise ConfigSchemaError('--group/--mu', f"obrigatórios para --kind {kind.value}")
        descriptor = GroupRegistry.get(group)
        n = descriptor.dimension

        if kind == TargetKind.SIMPLE:
            if descriptor.name == 'so3':
                tube = SimpleTubeService.so3_simple_tube(descriptor, mu)
            elif descriptor.name == 'sl2r':
                tube = SimpleTubeService.sl2_simple_tube(descriptor, mu)
            else:
                splitting = SplittingService.adapted_splitting(descriptor, np.zeros((n, 0)), mu)
                tube = SimpleTubeService.from_splitting(splitting)
            return TubeTarget(kind, tube)

        if xi_h is None:
            raise ConfigSchemaError('--xi-h', "obrigatório para --kind restricted")
        if descriptor.name == 'so3':
            rtube = RestrictedTubeService.so3_restricted_tube(descriptor, mu, xi_h)
        else:
            splitting = SplittingService.adapted_splitting(descriptor, np.asarray(xi_h, dtype=float)[:, None], mu)
            rtube = RestrictedTubeService.from_splitting(splitting)
        return TubeTarget(kind, rtube)

    @staticmethod
    def components(target: TubeTarget) -> List[Tuple[str, int]]:
        tube = target.tube
        if target.kind == TargetKind.SIMPLE:
            return [('nu', tube.nu_dimension), ('lambda', tube.lam_dimension)]
        if target.kind == TargetKind.RESTRICTED:
            splitting = tube.splitting
            return [('nu', tube.simple.nu_dimension), ('lambda', splitting.o.shape[1]), ('eps', splitting.l.shape[1])]
        if target.kind == TargetKind.TUBE0:
            m = tube.slice_dimension
            return [('nu', tube.splitting.p.shape[1]), ('lambda', tube.splitting.o.shape[1]), ('a', m), ('b', m)]
        dims = tube.dimensions
        if target.kind == TargetKind.GENERAL:
            return [('nu', dims['s'] + dims['p']), ('lambda', dims['o']), ('a', dims['B']), ('b', dims['B'])]
        return [('nu', tube.splitting.gmu.shape[1]), ('a', 1), ('b', 1)]

    @staticmethod
    def coordinates(target: TubeTarget, values: Dict[str, np.ndarray]) -> np.ndarray:
        """
        Vetor de carta a partir dos componentes informados (ausentes = 0).

        Raises:
            ConfigSchemaError: componente desconhecido
            DimensionMismatchError: componente com dimensão errada
        """
        components = TubeTargetService.components(target)
        known = {name for name, _ in components}
        for name in values:
            if name not in known:
                raise ConfigSchemaError(name, f"componente desconhecido para {target.kind.value}: use {sorted(known)}")

        parts = []
        for name, size in components:
            value = values.get(name)
            if value is None:
                parts.append(np.zeros(size))
                continue
            value = np.atleast_1d(np.asarray(value, dtype=float)) if np.size(value) else np.zeros(0)
            if value.shape != (size,):
                raise DimensionMismatchError(name, size, value.shape)
            parts.append(value)
        return np.concatenate(parts) if parts else np.zeros(0)

    @staticmethod
    def split(target: TubeTarget, w: np.ndarray) -> Dict[str, np.ndarray]:
        sizes = [size for _, size in TubeTargetService.components(target)]
        names = [name for name, _ in TubeTargetService.components(target)]
        return dict(zip(names, np.split(np.asarray(w, dtype=float), np.cumsum(sizes)[:-1])))

    @staticmethod
    def chart(target: TubeTarget):
        """(f, layout, alvo) da carta de verificação do tubo."""
        charts = {
            TargetKind.SIMPLE: TubeChartService.simple_chart,
            TargetKind.RESTRICTED: TubeChartService.restricted_chart,
            TargetKind.TUBE0: TubeChartService.tube0_chart,
            TargetKind.GENERAL: TubeChartService.general_chart,
            TargetKind.SO3R3: TubeChartService.so3r3_chart,
        }
        return charts[target.kind](target.tube)

    @staticmethod
    def model_point(target: TubeTarget, g: np.ndarray, values: Dict[str, np.ndarray]) -> ModelPoint:
        """Ponto do modelo para os tipos general e so3r3."""
        return ModelPoint.from_flat(target.tube, g, TubeTargetService.coordinates(target, values))

    @staticmethod
    def evaluate(target: TubeTarget, g: np.ndarray, values: Dict[str, np.ndarray]) -> dict:
        """
        Avaliação com checagem de domínio.

        Raises:
            DomainExitError: ponto fora do domínio do tubo
            DimensionMismatchError: componentes com dimensão errada
        """
        tube = target.tube
        parts = TubeTargetService.split(target, TubeTargetService.coordinates(target, values))

        if target.kind == TargetKind.SIMPLE:
            point = SimpleTubeService.simple_tube_eval(tube, g, parts['nu'], parts['lambda'])
            return {'kind': target.kind.value, 'output': point.to_dict()}

        if target.kind == TargetKind.RESTRICTED:
            point = RestrictedTubeService.restricted_tube_eval(tube, g, parts['nu'], parts['lambda'], parts['eps'])
            return {
                'kind': target.kind.value,
                'output': point.to_dict(),
                'residuals': {
                    'restricted_momentum': RestrictedTubeService.restricted_momentum_residual(tube, point, parts['eps']),
                },
            }

        if target.kind == TargetKind.TUBE0:
            phase = HamiltonianTubeService.tube0_eval(tube, g, parts['nu'], parts['lambda'], parts['a'], parts['b'])
        elif target.kind == TargetKind.GENERAL:
            phase = HamiltonianTubeService.general_tube_eval(tube, TubeTargetService.model_point(target, g, values))
        else:
            phase = HamiltonianTubeService.so3_r3_tube_eval(tube, g, parts['nu'], parts['a'], parts['b'])

        return {
            'kind': target.kind.value,
            'output': phase.to_dict(),
            'residuals': {
                'membership': HamiltonianTubeService.membership_residual(tube, phase),
                'momentum': float(np.linalg.norm(
                    HamiltonianTubeService.phase_momentum(tube, phase)
                    - TubeTargetService.expected_momentum(target, g, values)
                )),
            },
        }

    @staticmethod
    def expected_momentum(target: TubeTarget, g: np.ndarray, values: Dict[str, np.ndarray]) -> np.ndarray:
        """Ad*_{g⁻¹}(μ + ν̃) do modelo, para os tipos com modelo cotangente."""
        _, layout, _ = TubeTargetService.chart(target)
        w = TubeTargetService.coordinates(target, values)
        return AlgebraService.Adstar(target.descriptor, np.linalg.inv(g), layout.momentum(w))

    @staticmethod
    def target_momentum(target: TubeTarget, image) -> np.ndarray:
        """J do alvo na imagem da carta: Ad*_{g⁻¹}ν ou Q × P."""
        g, w = image
        if g is None:
            return np.cross(w[:3], w[3:6])
        return AlgebraService.Adstar(target.descriptor, np.linalg.inv(g), w[:target.descriptor.dimension])

    @staticmethod
    def phase_of(target: TubeTarget, image) -> PhasePoint:
        """Representante (g, ν, a, b) a partir da imagem da carta de um modelo."""
        g, w = image
        m = target.tube.slice_dimension
        return PhasePoint.representative(g, w[:w.size - 2 * m], w[w.size - 2 * m:w.size - m], w[w.size - m:])
