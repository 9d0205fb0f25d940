"""
Gtubes Domain.
"""

from .value_objects import (
    SimpleTubeStrategy,
    RestrictedTubeStrategy,
    TubeKind,
    CotangentGroupPoint,
    TubeRadii,
    NewtonConfig,
    SimpleTube,
    RestrictedTube,
)
from .exceptions import RadiusViolationError, ClosedFormDomainError, NewtonNonConvergenceError
from .validators import validate_radius

__all__ = [
    # Value Objects
    'SimpleTubeStrategy',
    'RestrictedTubeStrategy',
    'TubeKind',
    'CotangentGroupPoint',
    'TubeRadii',
    'NewtonConfig',
    'SimpleTube',
    'RestrictedTube',

    # Exceptions
    'RadiusViolationError',
    'ClosedFormDomainError',
    'NewtonNonConvergenceError',

    # Validators
    'validate_radius',
]
