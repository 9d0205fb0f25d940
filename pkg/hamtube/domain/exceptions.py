"""
Domain Exceptions - Saídas de domínio dos tubos hamiltonianos.
"""

from core.domain.exceptions import DomainExitError


class SingularGammaError(DomainExitError):
    """Sistema linear de Γ singular: b fora de (B*)_r."""

    def __init__(self, smallest_singular_value: float):
        message = (
            f"Sistema de Γ singular (menor valor singular {smallest_singular_value:.3e}); "
            "b fora do domínio"
        )
        super().__init__(message, code="SINGULAR_GAMMA", smallest_singular_value=smallest_singular_value)


class OutsideTubeImageError(DomainExitError):
    """Inversão sem convergência: ponto fora da imagem do tubo."""

    def __init__(self, residual: float, iterations: int):
        message = (
            f"Ponto fora da imagem do tubo: inversão parou com resíduo {residual:.3e} "
            f"após {iterations} iterações"
        )
        super().__init__(message, code="OUTSIDE_TUBE_IMAGE", residual=residual, iterations=iterations)
