"""
Domain Validators - Validações numéricas do núcleo de Lie.

Funções puras: calculam um resíduo, comparam com a tolerância e levantam
exceções de domínio.
"""
import numpy as np

from core.domain.exceptions import DimensionMismatchError
from .exceptions import (
    InvalidGroupElementError,
    InvalidRepresentationError,
    StructureConstantsError,
)
from .value_objects import (
    AlgebraVector,
    CoalgebraVector,
    DefiningEquations,
    GroupDescriptor,
    GroupElement,
    Representation,
    require_same_descriptor,
)


def membership_residual(descriptor: GroupDescriptor, matrix: np.ndarray) -> float:
    """Resíduo das equações de definição do grupo."""
    matrix = np.asarray(matrix, dtype=float)
    equations = descriptor.defining_equations
    if equations == DefiningEquations.ORTHOGONAL:
        identity = np.eye(matrix.shape[0])
        return max(
            float(np.max(np.abs(matrix.T @ matrix - identity))),
            abs(float(np.linalg.det(matrix)) - 1.0),
        )
    if equations == DefiningEquations.UNIMODULAR:
        return abs(float(np.linalg.det(matrix)) - 1.0)
    return 0.0 if abs(np.linalg.det(matrix)) > 0 else np.inf


def validate_group_element(descriptor: GroupDescriptor, matrix: np.ndarray) -> None:
    """
    Valida que a matriz realiza um elemento do grupo.

    Args:
        descriptor: Grupo de referência
        matrix: Matriz candidata

    Raises:
        DimensionMismatchError: Se a matriz não for d×d
        InvalidGroupElementError: Se o resíduo exceder membership_tol
    """
    size = descriptor.matrix_size
    if np.shape(matrix) != (size, size):
        raise DimensionMismatchError("elemento de grupo", (size, size), np.shape(matrix))

    residual = membership_residual(descriptor, matrix)
    if residual > descriptor.membership_tol:
        raise InvalidGroupElementError(descriptor.name, residual, descriptor.membership_tol)


def validate_structure_constants(name: str, constants: np.ndarray, tol: float) -> None:
    """
    Valida antissimetria e identidade de Jacobi das constantes de estrutura.

    Raises:
        StructureConstantsError: Se algum resíduo exceder tol
    """
    antisymmetry = float(np.max(np.abs(constants + constants.transpose(1, 0, 2))))
    if antisymmetry > tol:
        raise StructureConstantsError(name, "não antissimétricas", antisymmetry)

    # Σ_m c[j,k,m] c[i,m,l] + cíclicas = 0
    jacobi = (
        np.einsum('jkm,iml->ijkl', constants, constants)
        + np.einsum('kim,jml->ijkl', constants, constants)
        + np.einsum('ijm,kml->ijkl', constants, constants)
    )
    residual = float(np.max(np.abs(jacobi))) if jacobi.size else 0.0
    if residual > tol:
        raise StructureConstantsError(name, "identidade de Jacobi violada", residual)


def validate_dimension(what: str, vector: np.ndarray, expected: int) -> np.ndarray:
    """Converte para array float e confere o comprimento."""
    vector = np.atleast_1d(np.asarray(vector, dtype=float))
    if vector.shape != (expected,):
        raise DimensionMismatchError(what, expected, vector.shape[0] if vector.ndim == 1 else vector.shape)
    return vector


def algebra_coordinates(descriptor: GroupDescriptor, what: str, value) -> np.ndarray:
    """
    Coordenadas de um vetor de g ou g*.

    Aceita arrays ou AlgebraVector/CoalgebraVector; os vetores tipados têm
    o descritor conferido contra o da operação.

    Raises:
        DescriptorMismatchError: vetor de outro grupo
        DimensionMismatchError: comprimento diferente de dim g
    """
    if isinstance(value, (AlgebraVector, CoalgebraVector)):
        require_same_descriptor(descriptor, value.descriptor)
        value = value.coords
    return validate_dimension(what, value, descriptor.dimension)


def group_matrix(descriptor: GroupDescriptor, value) -> np.ndarray:
    """
    Matriz de um elemento de grupo (array ou GroupElement).

    Raises:
        DescriptorMismatchError: elemento de outro grupo
    """
    if isinstance(value, GroupElement):
        require_same_descriptor(descriptor, value.descriptor)
        value = value.matrix
    return np.asarray(value, dtype=float)


def validate_representation(
    descriptor: GroupDescriptor,
    representation: Representation,
    tol: float,
) -> None:
    """
    Valida [A_i, A_j] = A([ξ_i, ξ_j]) para todos os pares de geradores.

    Raises:
        DimensionMismatchError: Shapes incompatíveis
        InvalidRepresentationError: Resíduo do comutador acima de tol
    """
    generators, matrices = representation.generators, representation.matrices
    if generators.shape[0] != descriptor.dimension:
        raise DimensionMismatchError("geradores da representação", descriptor.dimension, generators.shape[0])
    if matrices.shape[0] != generators.shape[1]:
        raise DimensionMismatchError("matrizes da representação", generators.shape[1], matrices.shape[0])

    constants = descriptor.structure_constants
    residual = 0.0
    for i in range(representation.rank):
        for j in range(i + 1, representation.rank):
            bracket = np.einsum('ijk,i,j->k', constants, generators[:, i], generators[:, j])
            coefficients, *_ = np.linalg.lstsq(generators, bracket, rcond=None)
            # O colchete deve permanecer na subálgebra
            residual = max(residual, float(np.linalg.norm(generators @ coefficients - bracket)))
            commutator = matrices[i] @ matrices[j] - matrices[j] @ matrices[i]
            image = np.tensordot(coefficients, matrices, axes=1)
            residual = max(residual, float(np.max(np.abs(commutator - image))))

    if residual > tol:
        raise InvalidRepresentationError(residual, tol)
