"""
Domain Exceptions - Exceções do núcleo de grupos de Lie.
"""

from core.domain.exceptions import DomainException


class DescriptorMismatchError(DomainException):
    """Vetores ou elementos de grupos diferentes combinados numa operação."""

    def __init__(self, expected: str, received: str):
        message = (
            f"Descritor de grupo incompatível. "
            f"Esperado: '{expected}', Recebido: '{received}'"
        )
        super().__init__(message, code="DESCRIPTOR_MISMATCH")
        self.expected = expected
        self.received = received


class InvalidGroupElementError(DomainException):
    """
    Matriz fora do grupo.

    Levantada quando o resíduo das equações de definição (GᵀG = I,
    det G = 1) excede a tolerância de pertinência do descritor.
    """

    def __init__(self, group_name: str, residual: float, tolerance: float):
        message = (
            f"Matriz não pertence ao grupo '{group_name}': "
            f"resíduo {residual:.3e} > tolerância {tolerance:.1e}"
        )
        super().__init__(message, code="INVALID_GROUP_ELEMENT")
        self.group_name = group_name
        self.residual = residual
        self.tolerance = tolerance


class StructureConstantsError(DomainException):
    """Constantes de estrutura não antissimétricas ou violando Jacobi."""

    def __init__(self, group_name: str, reason: str, residual: float):
        message = (
            f"Constantes de estrutura inválidas para '{group_name}': "
            f"{reason} (resíduo {residual:.3e})"
        )
        super().__init__(message, code="STRUCTURE_CONSTANTS")
        self.residual = residual


class InvalidRepresentationError(DomainException):
    """As matrizes de ação não respeitam [A_i, A_j] = A([ξ_i, ξ_j])."""

    def __init__(self, residual: float, tolerance: float):
        message = (
            f"Representação inválida: resíduo do comutador {residual:.3e} "
            f"> tolerância {tolerance:.1e}"
        )
        super().__init__(message, code="INVALID_REPRESENTATION")
        self.residual = residual
