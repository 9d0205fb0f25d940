"""
Core Domain - Exceções base e esquema de configuração.
"""

from .exceptions import (
    DomainException,
    ConfigSchemaError,
    DomainExitError,
    DimensionMismatchError,
    VerificationFailedError,
    PreconditionError,
    UnsupportedConfigurationError,
)
from .model_config import ModelConfig, validate_model_config
from .tube_target import SweepCheck, SweepParameter, SweepRow, TargetKind, TubeTarget

__all__ = [
    # Value Objects
    'ModelConfig',
    'TargetKind',
    'SweepCheck',
    'TubeTarget',
    'SweepParameter',
    'SweepRow',

    # Exceptions
    'DomainException',
    'ConfigSchemaError',
    'DomainExitError',
    'DimensionMismatchError',
    'VerificationFailedError',
    'PreconditionError',
    'UnsupportedConfigurationError',

    # Validators
    'validate_model_config',
]
