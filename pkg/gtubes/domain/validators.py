"""
Domain Validators - Domínios dos tubos.
"""
import numpy as np

from .exceptions import RadiusViolationError


def validate_radius(coordinate: str, value: np.ndarray, radius: float) -> None:
    """
    Valida ‖value‖ ≤ radius.

    Args:
        coordinate: Nome da coordenada (para a mensagem)
        value: Coordenadas
        radius: Raio configurado (inf desativa)

    Raises:
        RadiusViolationError: Se a norma exceder o raio
    """
    norm = float(np.linalg.norm(value)) if np.size(value) else 0.0
    if norm > radius:
        raise RadiusViolationError(coordinate, norm, radius)
