"""
Serialização JSON de splittings.

As bases são gravadas como listas de colunas (coordenadas em g). Na
leitura o splitting é re-certificado: um arquivo editado à mão não
passa sem verificação.
"""
from dataclasses import replace
from typing import Optional

import numpy as np

from core.domain.exceptions import ConfigSchemaError
from core.utils.json_utils import parse_vector
from lie.services import GroupRegistry
from splitting.domain import AdaptedSplitting, OmegaForm, SigmaMap, SymplecticSliceData

_BASES = ('h', 'gmu', 'hmu', 'o', 'l', 'n', 'p')


def _columns(basis: np.ndarray) -> list:
    return [basis[:, j].tolist() for j in range(basis.shape[1])]


def _basis(document: dict, key: str, dimension: int) -> np.ndarray:
    columns = document.get('bases', {}).get(key)
    if columns is None:
        raise ConfigSchemaError(f"bases.{key}", "campo obrigatório ausente")
    if len(columns) == 0:
        return np.zeros((dimension, 0))
    basis = np.array(columns, dtype=float).T
    if basis.shape[0] != dimension:
        raise ConfigSchemaError(f"bases.{key}", f"vetores devem ter dimensão {dimension}")
    return basis


class SplittingSerializer:
    """
    Conversão AdaptedSplitting ⇄ dict JSON.
    """

    @staticmethod
    def to_dict(
        splitting: AdaptedSplitting,
        sigma: Optional[SigmaMap] = None,
        slice_data: Optional[SymplecticSliceData] = None,
    ) -> dict:
        document = {
            'group': splitting.descriptor.name,
            'mu': splitting.mu.tolist(),
            'bases': {key: _columns(getattr(splitting, key)) for key in _BASES},
            'metric': splitting.metric.tolist(),
            'dimensions': splitting.dimensions,
            'certification': dict(splitting.residuals),
        }
        if sigma is not None:
            document['sigma'] = {
                'matrix': sigma.matrix.tolist(),
                'condition_number': sigma.condition_number,
            }
        if slice_data is not None:
            document['slice'] = {
                'alpha': slice_data.alpha.tolist(),
                'B': _columns(slice_data.B),
                'C': _columns(slice_data.C),
                'gz': _columns(slice_data.gz),
                's': _columns(slice_data.s),
                'certification': dict(slice_data.residuals),
            }
        return document

    @staticmethod
    def from_dict(document: dict) -> AdaptedSplitting:
        """
        Reconstrói e re-certifica um splitting serializado.

        Raises:
            ConfigSchemaError: documento malformado
            CertificationError: invariantes não valem para as bases lidas
        """
        from splitting.services.splitting_service import SplittingService

        descriptor = GroupRegistry.get(document.get('group', ''))
        dimension = descriptor.dimension
        mu = parse_vector(document, 'mu')
        if mu.shape != (dimension,):
            raise ConfigSchemaError('mu', f"esperado vetor de dimensão {dimension}")

        bases = {key: _basis(document, key, dimension) for key in _BASES}
        metric = np.array(document.get('metric', np.eye(dimension).tolist()), dtype=float)
        splitting = AdaptedSplitting(
            descriptor=descriptor,
            mu=mu,
            metric=metric,
            omega=OmegaForm.from_mu(descriptor, mu),
            **bases,
        )
        residuals = SplittingService.certify(splitting)
        return replace(splitting, residuals=residuals)
