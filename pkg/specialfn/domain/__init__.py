"""
Specialfn Domain.
"""

from .value_objects import SpecialFunction, MoserCase, ScalarSolveConfig, SpecialValue
from .exceptions import (
    SpecialFunctionDomainError,
    ScalarNonConvergenceError,
    NoRootInBracketError,
)

__all__ = [
    # Value Objects
    'SpecialFunction',
    'MoserCase',
    'ScalarSolveConfig',
    'SpecialValue',

    # Exceptions
    'SpecialFunctionDomainError',
    'ScalarNonConvergenceError',
    'NoRootInBracketError',
]
