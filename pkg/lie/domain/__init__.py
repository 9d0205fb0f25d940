"""
Lie Domain - Descritores, vetores e representações sem dependências de framework.
"""

from .value_objects import (
    PairingKind,
    DefiningEquations,
    ExpMethod,
    GroupDescriptor,
    GroupElement,
    AlgebraVector,
    CoalgebraVector,
    Representation,
    require_same_descriptor,
)
from .exceptions import (
    DescriptorMismatchError,
    InvalidGroupElementError,
    StructureConstantsError,
    InvalidRepresentationError,
)
from .validators import (
    algebra_coordinates,
    group_matrix,
    membership_residual,
    validate_group_element,
    validate_structure_constants,
    validate_dimension,
    validate_representation,
)

__all__ = [
    # Value Objects
    'PairingKind',
    'DefiningEquations',
    'ExpMethod',
    'GroupDescriptor',
    'GroupElement',
    'AlgebraVector',
    'CoalgebraVector',
    'Representation',
    'require_same_descriptor',

    # Exceptions
    'DescriptorMismatchError',
    'InvalidGroupElementError',
    'StructureConstantsError',
    'InvalidRepresentationError',

    # Validators
    'algebra_coordinates',
    'group_matrix',
    'membership_residual',
    'validate_group_element',
    'validate_structure_constants',
    'validate_dimension',
    'validate_representation',
]
