"""
Verification Domain.
"""

from .value_objects import (
    CheckKind,
    SuiteName,
    FDConfig,
    CheckRecord,
    VerificationReport,
    ModelChartLayout,
    TargetChart,
)
from .exceptions import UnknownSuiteError, InvalidFDConfigError

__all__ = [
    # Value Objects
    'CheckKind',
    'SuiteName',
    'FDConfig',
    'CheckRecord',
    'VerificationReport',
    'ModelChartLayout',
    'TargetChart',

    # Exceptions
    'UnknownSuiteError',
    'InvalidFDConfigError',
]
