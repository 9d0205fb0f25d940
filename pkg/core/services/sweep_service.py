"""
Sweep Service - Resíduos de um tubo sobre uma grade cartesiana de parâmetros.

Cada parâmetro fixa uma coordenada da carta (nu.i, lambda.i, eps.i, a.i,
b.i) ou do grupo (xi.i, com g = exp(ξ)); as demais ficam no centro.
Células fora do domínio viram linhas "exit".
"""
import itertools
import logging
from typing import Dict, List, Optional, Sequence

import numpy as np

from core.domain import (
    ConfigSchemaError,
    DomainExitError,
    SweepCheck,
    SweepParameter,
    SweepRow,
    TargetKind,
    TubeTarget,
)
from core.utils.json_utils import csv_text
from gtubes.domain import CotangentGroupPoint
from gtubes.services import RestrictedTubeService
from hamtube.services import HamiltonianTubeService
from lie.services import AlgebraService
from verification.domain import FDConfig
from verification.services import FiniteDifferenceService, map_points

from .tube_target_service import TubeTargetService

logger = logging.getLogger(__name__)

_CHECK_KINDS = {
    SweepCheck.RESTRICTED_MOMENTUM: (TargetKind.RESTRICTED,),
    SweepCheck.MEMBERSHIP: (TargetKind.TUBE0, TargetKind.GENERAL),
}


class SweepService:

    @staticmethod
    def grid(parameters: Sequence[SweepParameter]) -> List[tuple]:
        """Produto cartesiano: [(índice, {nome: valor})] em ordem lexicográfica do índice."""
        names = [parameter.name for parameter in parameters]
        if len(set(names)) != len(names):
            raise ConfigSchemaError('--param', "parâmetros repetidos")
        axes = [range(parameter.count) for parameter in parameters]
        cells = []
        for index in itertools.product(*axes):
            values = {
                parameter.name: float(parameter.values[i]) for parameter, i in zip(parameters, index)
            }
            cells.append((tuple(index), values))
        return cells

    @staticmethod
    def validate(target: TubeTarget, check: SweepCheck, parameters: Sequence[SweepParameter]) -> None:
        """
        Raises:
            ConfigSchemaError: verificação ou parâmetro incompatível com o tubo
        """
        allowed = _CHECK_KINDS.get(check)
        if allowed and target.kind not in allowed:
            raise ConfigSchemaError('--check', f"{check.value} não se aplica a --kind {target.kind.value}")
        sizes = dict(TubeTargetService.components(target))
        sizes['xi'] = target.descriptor.dimension
        for parameter in parameters:
            if parameter.component not in sizes:
                raise ConfigSchemaError('--param', f"componente desconhecido '{parameter.component}'; use {sorted(sizes)}")
            if parameter.index >= sizes[parameter.component]:
                raise ConfigSchemaError('--param', f"{parameter.name}: índice fora de 0..{sizes[parameter.component] - 1}")

    @staticmethod
    def cell_point(target: TubeTarget, values: Dict[str, float]):
        """(g, w) da carta para uma célula da grade."""
        descriptor = target.descriptor
        xi = np.zeros(descriptor.dimension)
        components = {name: np.zeros(size) for name, size in TubeTargetService.components(target)}
        for name, value in values.items():
            component, index = name.split('.')
            if component == 'xi':
                xi[int(index)] = value
            else:
                components[component][int(index)] = value
        return AlgebraService.exp(descriptor, xi), TubeTargetService.coordinates(target, components)

    @staticmethod
    def residual(target: TubeTarget, check: SweepCheck, g: np.ndarray, w: np.ndarray, config: FDConfig) -> float:
        f, layout, chart = TubeTargetService.chart(target)
        if check == SweepCheck.PULLBACK:
            return FiniteDifferenceService.pullback_residual(f, layout, chart, g, w, config.step)

        image = f(g, w)
        if check == SweepCheck.MOMENTUM:
            expected = AlgebraService.Adstar(target.descriptor, np.linalg.inv(g), layout.momentum(w))
            return float(np.linalg.norm(TubeTargetService.target_momentum(target, image) - expected))
        if check == SweepCheck.RESTRICTED_MOMENTUM:
            eps = TubeTargetService.split(target, w)['eps']
            return RestrictedTubeService.restricted_momentum_residual(target.tube, CotangentGroupPoint(*image), eps)
        return HamiltonianTubeService.membership_residual(target.tube, TubeTargetService.phase_of(target, image))

    @staticmethod
    def run(
        target: TubeTarget,
        check: str,
        parameters: Sequence[SweepParameter],
        config: Optional[FDConfig] = None,
        threads: Optional[int] = None,
    ) -> List[SweepRow]:
        """
        Avalia check em cada célula da grade; linhas ordenadas pelo índice.

        Raises:
            ConfigSchemaError: verificação ou parâmetros inválidos
        """
        check = SweepCheck(check)
        config = config or FDConfig.from_settings()
        SweepService.validate(target, check, parameters)

        def evaluate(cell) -> SweepRow:
            index, values = cell
            try:
                g, w = SweepService.cell_point(target, values)
                residual = SweepService.residual(target, check, g, w, config)
            except DomainExitError as exc:
                logger.debug("Célula %s fora do domínio: %s", index, exc.code)
                return SweepRow(index, values, check.value, None, exc.code)
            return SweepRow(index, values, check.value, float(residual))

        rows = map_points(evaluate, SweepService.grid(parameters), threads)
        exits = sum(row.exited for row in rows)
        logger.info("Varredura %s: %d células, %d saídas de domínio", check.value, len(rows), exits)
        return sorted(rows, key=lambda row: row.index)

    @staticmethod
    def to_csv(rows: Sequence[SweepRow], parameters: Sequence[SweepParameter]) -> str:
        names = [parameter.name for parameter in parameters]
        return csv_text(['index', *names, 'check', 'residual'], (row.cells(names) for row in rows))
