"""
Domain Exceptions - Exceções das funções especiais.
"""

from core.domain.exceptions import DomainException, DomainExitError


class SpecialFunctionDomainError(DomainExitError):
    """Argumento fora do domínio de uma função especial (ℱ exige x ≤ 1)."""

    def __init__(self, function: str, x: float):
        message = f"Argumento fora do domínio de {function}: x = {x!r}"
        super().__init__(message, code="SPECIAL_FUNCTION_DOMAIN", function=function, x=x)
        self.function = function
        self.x = x


class ScalarNonConvergenceError(DomainException):
    """Resolvedor escalar não convergiu (não deveria ocorrer para ℰ)."""

    def __init__(self, what: str, iterations: int, residual: float):
        message = (
            f"Resolução escalar de {what} não convergiu em {iterations} "
            f"iterações (resíduo {residual:.3e})"
        )
        super().__init__(message, code="SCALAR_NON_CONVERGENCE")
        self.iterations = iterations
        self.residual = residual


class NoRootInBracketError(DomainExitError):
    """Nenhuma raiz da equação de m₁ no intervalo explorado: saída do domínio do tubo."""

    def __init__(self, upper: float):
        message = f"Equação de escala sem raiz em (0, {upper:.3g}]: ponto fora do domínio do tubo"
        super().__init__(message, code="NO_ROOT_IN_BRACKET", upper=upper)
