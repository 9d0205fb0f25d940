"""
Hamtube Domain.
"""

from .value_objects import (
    ModelKind,
    PhaseKind,
    CotangentModel,
    ModelPoint,
    PhasePoint,
    BatesLermanResult,
)
from .exceptions import SingularGammaError, OutsideTubeImageError
from .validators import validate_model_point

__all__ = [
    # Value Objects
    'ModelKind',
    'PhaseKind',
    'CotangentModel',
    'ModelPoint',
    'PhasePoint',
    'BatesLermanResult',

    # Exceptions
    'SingularGammaError',
    'OutsideTubeImageError',

    # Validators
    'validate_model_point',
]
