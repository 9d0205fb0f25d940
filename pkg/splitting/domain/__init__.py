"""
Splitting Domain.
"""

from .value_objects import OmegaForm, AdaptedSplitting, SigmaMap, SymplecticSliceData
from .exceptions import IllConditionedKernelError, CertificationError, SingularSigmaError

__all__ = [
    # Value Objects
    'OmegaForm',
    'AdaptedSplitting',
    'SigmaMap',
    'SymplecticSliceData',

    # Exceptions
    'IllConditionedKernelError',
    'CertificationError',
    'SingularSigmaError',
]
