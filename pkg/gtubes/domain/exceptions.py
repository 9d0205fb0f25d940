"""
Domain Exceptions - Saídas de domínio dos G-tubos.
"""

from core.domain.exceptions import DomainExitError


class RadiusViolationError(DomainExitError):
    """Coordenada fora do raio configurado do tubo."""

    def __init__(self, coordinate: str, norm: float, radius: float):
        message = (
            f"Coordenada '{coordinate}' fora do raio do tubo: "
            f"‖·‖ = {norm:.6g} > {radius:.6g}"
        )
        super().__init__(message, code="RADIUS_VIOLATION", coordinate=coordinate, norm=norm, radius=radius)


class ClosedFormDomainError(DomainExitError):
    """Argumento fora do domínio de uma fórmula fechada (razão, ℱ ou arcsin)."""

    def __init__(self, formula: str, value: float):
        message = f"Fórmula fechada '{formula}' fora do domínio (argumento {value:.6g})"
        super().__init__(message, code="CLOSED_FORM_DOMAIN", formula=formula, value=value)


class NewtonNonConvergenceError(DomainExitError):
    """Newton para ζ ∈ n não convergiu: ponto fora da vizinhança do tubo restrito."""

    def __init__(self, iterations: int, residual: float):
        message = (
            f"Newton do tubo restrito não convergiu em {iterations} iterações "
            f"(resíduo {residual:.3e})"
        )
        super().__init__(message, code="NEWTON_NON_CONVERGENCE", iterations=iterations, residual=residual)
