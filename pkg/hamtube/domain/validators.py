"""
Domain Validators - Pontos dos modelos cotangentes.
"""
import numpy as np

from core.domain.exceptions import DimensionMismatchError
from gtubes.domain import validate_radius

from .value_objects import CotangentModel, ModelPoint


def validate_model_point(model: CotangentModel, point: ModelPoint) -> None:
    """
    Valida dimensões e raios de um ponto do modelo.

    Args:
        model: Modelo cotangente
        point: Ponto (g, ν_s, ν_p, λ, a, b)

    Raises:
        DimensionMismatchError: componente com dimensão errada
        RadiusViolationError: componente fora do raio configurado
    """
    dims = model.dimensions
    expected = {
        'nu_s': dims['s'],
        'nu_p': dims['p'],
        'lambda': dims['o'],
        'a': dims['B'],
        'b': dims['B'],
    }
    values = {
        'nu_s': point.nu_s,
        'nu_p': point.nu_p,
        'lambda': point.lam,
        'a': point.a,
        'b': point.b,
    }
    for name, size in expected.items():
        if np.shape(values[name]) != (size,):
            raise DimensionMismatchError(name, size, np.shape(values[name]))
    size = model.descriptor.matrix_size
    if np.shape(point.g) != (size, size):
        raise DimensionMismatchError("g", (size, size), np.shape(point.g))

    radii = model.radii
    validate_radius('nu', np.concatenate([point.nu_s, point.nu_p]), radii.nu)
    validate_radius('lambda', point.lam, radii.lam)
    validate_radius('a', point.a, radii.a)
    validate_radius('b', point.b, radii.b)
