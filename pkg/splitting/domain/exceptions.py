"""
Domain Exceptions - Exceções da construção de splittings.
"""

from core.domain.exceptions import DomainException


class IllConditionedKernelError(DomainException):
    """
    Núcleo sem salto claro de valores singulares.

    Sinaliza μ próximo de uma fronteira de estrato: a dimensão de g_μ não
    é decidível com a tolerância configurada.
    """

    def __init__(self, singular_values, tolerance: float):
        message = (
            f"Núcleo mal condicionado: valores singulares {list(singular_values)} "
            f"sem salto acima de {tolerance:.1e}"
        )
        super().__init__(message, code="ILL_CONDITIONED_KERNEL")
        self.singular_values = list(singular_values)
        self.tolerance = tolerance


class CertificationError(DomainException):
    """Uma invariante do splitting falhou na re-verificação numérica."""

    def __init__(self, invariant: str, residual: float, tolerance: float):
        message = (
            f"Certificação falhou em '{invariant}': "
            f"resíduo {residual:.3e} > tolerância {tolerance:.1e}"
        )
        super().__init__(message, code="CERTIFICATION_FAILED")
        self.invariant = invariant
        self.residual = residual
        self.tolerance = tolerance


class SingularSigmaError(DomainException):
    """σ: n → l* não inversível; indica um splitting defeituoso."""

    def __init__(self, condition_number: float):
        message = f"σ singular (número de condição {condition_number:.3e})"
        super().__init__(message, code="SINGULAR_SIGMA")
        self.condition_number = condition_number
