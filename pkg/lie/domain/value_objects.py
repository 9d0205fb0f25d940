"""
Domain Value Objects - Objetos de valor imutáveis do núcleo de Lie.

Convenções (válidas em todo o projeto):
    - Coordenadas da álgebra na base declarada; coálgebra em coordenadas
      duais, com ⟨ν, ξ⟩ = ν · ξ.
    - Constantes de estrutura: [e_i, e_j] = Σ_k c[i, j, k] e_k.
    - ⟨ad*_ξ μ, η⟩ = ⟨μ, [ξ, η]⟩ e ⟨Ad*_g ν, ξ⟩ = ⟨ν, Ad_g ξ⟩.

Estes objetos não dependem de Django.
"""
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from core.domain.exceptions import PreconditionError

from .exceptions import DescriptorMismatchError


class PairingKind(str, Enum):
    """
    Como a coálgebra é identificada.

    DUAL: coordenadas duais puras (SO(3) com o produto escalar)
    TRACE_FORM: forma bilinear ⟨A, B⟩ = −2·tr(AB) (SL(2,R))
    """
    DUAL = "DUAL"
    TRACE_FORM = "TRACE_FORM"

    @classmethod
    def choices(cls):
        return [(item.value, item.name) for item in cls]


class DefiningEquations(str, Enum):
    """Equações que definem o grupo matricial."""
    ORTHOGONAL = "ORTHOGONAL"    # GᵀG = I, det G = 1
    UNIMODULAR = "UNIMODULAR"    # det G = 1
    NONE = "NONE"                # apenas inversível

    @classmethod
    def choices(cls):
        return [(item.value, item.name) for item in cls]


class ExpMethod(str, Enum):
    """Caminho de cálculo da exponencial."""
    PADE = "PADE"                # scaling-and-squaring (scipy.linalg.expm)
    RODRIGUES = "RODRIGUES"      # fórmula fechada, somente SO(3)

    @classmethod
    def choices(cls):
        return [(item.value, item.name) for item in cls]


@dataclass(frozen=True, eq=False)
class GroupDescriptor:
    """
    Descritor de um grupo de Lie matricial.

    basis tem shape (n, d, d); structure_constants (n, n, n).
    """
    name: str
    basis: np.ndarray
    structure_constants: np.ndarray
    pairing: PairingKind
    defining_equations: DefiningEquations
    membership_tol: float

    @property
    def dimension(self) -> int:
        return self.basis.shape[0]

    @property
    def matrix_size(self) -> int:
        return self.basis.shape[1]

    @property
    def gram(self) -> np.ndarray:
        """
        Matriz da forma bilinear invariante na base declarada.

        Identidade para DUAL; −2·tr(B_i B_j) para TRACE_FORM.
        """
        if self.pairing == PairingKind.TRACE_FORM:
            return -2.0 * np.einsum('iab,jba->ij', self.basis, self.basis)
        return np.eye(self.dimension)

    def to_matrix(self, coords: np.ndarray) -> np.ndarray:
        """Σ coords_i B_i."""
        return np.tensordot(np.asarray(coords, dtype=float), self.basis, axes=1)

    def from_matrix(self, matrix: np.ndarray) -> np.ndarray:
        """Coordenadas de uma matriz da álgebra na base declarada."""
        flat = self.basis.reshape(self.dimension, -1).T
        coords, *_ = np.linalg.lstsq(flat, np.asarray(matrix, dtype=float).ravel(), rcond=None)
        return coords

    def vector(self, coords) -> "AlgebraVector":
        return AlgebraVector(self, np.asarray(coords, dtype=float))

    def covector(self, coords) -> "CoalgebraVector":
        return CoalgebraVector(self, np.asarray(coords, dtype=float))

    def element(self, matrix) -> "GroupElement":
        return GroupElement(self, np.asarray(matrix, dtype=float))

    def __repr__(self):
        return f"GroupDescriptor(name={self.name!r}, dimension={self.dimension})"


@dataclass(frozen=True)
class GroupElement:
    """Elemento g ∈ G realizado como matriz."""
    descriptor: GroupDescriptor
    matrix: np.ndarray

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        require_same_descriptor(self.descriptor, other.descriptor)
        return GroupElement(self.descriptor, self.matrix @ other.matrix)

    def inverse(self) -> "GroupElement":
        return GroupElement(self.descriptor, np.linalg.inv(self.matrix))

    @classmethod
    def identity(cls, descriptor: GroupDescriptor) -> "GroupElement":
        return cls(descriptor, np.eye(descriptor.matrix_size))


@dataclass(frozen=True)
class AlgebraVector:
    """ξ ∈ g em coordenadas da base declarada."""
    descriptor: GroupDescriptor
    coords: np.ndarray = field(repr=False)

    def bracket(self, other: "AlgebraVector") -> "AlgebraVector":
        require_same_descriptor(self.descriptor, other.descriptor)
        c = self.descriptor.structure_constants
        return AlgebraVector(self.descriptor, np.einsum('ijk,i,j->k', c, self.coords, other.coords))


@dataclass(frozen=True)
class CoalgebraVector:
    """ν ∈ g* em coordenadas duais."""
    descriptor: GroupDescriptor
    coords: np.ndarray = field(repr=False)

    def pair(self, xi: AlgebraVector) -> float:
        require_same_descriptor(self.descriptor, xi.descriptor)
        return float(self.coords @ xi.coords)


@dataclass(frozen=True, eq=False)
class Representation:
    """
    Representação de uma subálgebra k ⊂ g num espaço V = R^m.

    generators: (n, r) base de k em coordenadas de g
    matrices: (r, m, m) ação de cada gerador em V
    """
    generators: np.ndarray
    matrices: np.ndarray

    MEMBERSHIP_RTOL = 1e-9

    @property
    def dimension(self) -> int:
        return self.matrices.shape[1]

    @property
    def rank(self) -> int:
        return self.generators.shape[1]

    def coefficients(self, xi: np.ndarray) -> np.ndarray:
        """Coordenadas de ξ ∈ k na base de geradores."""
        if self.rank == 0:
            return np.zeros(0)
        coefficients, *_ = np.linalg.lstsq(self.generators, xi, rcond=None)
        return coefficients

    def action(self, xi: np.ndarray) -> np.ndarray:
        """
        Matriz de ξ· em V.

        Raises:
            PreconditionError: ξ fora de k (resíduo da projeção acima de
                MEMBERSHIP_RTOL·max(1, ‖ξ‖))
        """
        xi = np.asarray(xi, dtype=float)
        if self.rank == 0:
            residual = float(np.linalg.norm(xi))
            coefficients = np.zeros(0)
        else:
            coefficients = self.coefficients(xi)
            residual = float(np.linalg.norm(self.generators @ coefficients - xi))
        if residual > self.MEMBERSHIP_RTOL * max(1.0, float(np.linalg.norm(xi))):
            raise PreconditionError("ξ pertence à subálgebra da representação", residual)
        if self.rank == 0:
            return np.zeros((self.dimension, self.dimension))
        return np.tensordot(coefficients, self.matrices, axes=1)

    def dual_action(self, xi: np.ndarray) -> np.ndarray:
        """Ação contragrediente em V*: ξ·β = −A(ξ)ᵀβ."""
        return -self.action(xi).T

    def is_orthogonal(self, tol: float = 1e-12) -> bool:
        return all(np.allclose(m, -m.T, atol=tol) for m in self.matrices)

    def __repr__(self):
        return f"Representation(rank={self.rank}, dimension={self.dimension})"


def require_same_descriptor(expected: GroupDescriptor, received: GroupDescriptor) -> None:
    """Levanta DescriptorMismatchError se os descritores diferirem."""
    if expected is not received and expected.name != received.name:
        raise DescriptorMismatchError(expected.name, received.name)
