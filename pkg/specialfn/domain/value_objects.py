"""
Domain Value Objects - Configuração e resultados dos resolvedores escalares.
"""
from dataclasses import dataclass
from enum import Enum


class SpecialFunction(str, Enum):
    """Funções expostas pela CLI."""
    E = "E"
    F = "F"

    @classmethod
    def choices(cls):
        return [(item.value, item.name) for item in cls]


class MoserCase(str, Enum):
    """
    Caminho usado para o chute inicial de m₁.

    SUBALGEBRA: q é subálgebra (m₁ = ℰ(−tr ad_λ|q))
    CUBIC: ad³ + a·ad = 0 e ⟨μ+ν, ad²_ξ η⟩ = 0 (m₁ = ℱ(a/4b)/√b)
    GENERIC: sem fórmula fechada, chute m₁ = 1
    """
    SUBALGEBRA = "SUBALGEBRA"
    CUBIC = "CUBIC"
    GENERIC = "GENERIC"

    @classmethod
    def choices(cls):
        return [(item.value, item.name) for item in cls]


@dataclass(frozen=True)
class ScalarSolveConfig:
    abs_tol: float = 1e-14
    max_iter: int = 100
    bracketing: bool = True

    def __post_init__(self):
        if not self.abs_tol > 0:
            raise ValueError("abs_tol deve ser positivo")
        if self.max_iter < 1:
            raise ValueError("max_iter deve ser >= 1")

    @classmethod
    def from_settings(cls) -> "ScalarSolveConfig":
        from core.utils.policy import policy

        return cls(
            abs_tol=policy('SCALAR_ABS_TOL'),
            max_iter=policy('SCALAR_MAX_ITER'),
            bracketing=policy('SCALAR_BRACKETING'),
        )


@dataclass(frozen=True)
class SpecialValue:
    """Valor de uma função especial com o resíduo da identidade que a define."""
    function: SpecialFunction
    x: float
    value: float
    residual: float

    def to_dict(self) -> dict:
        return {
            'function': self.function.value,
            'x': self.x,
            'value': self.value,
            'residual': self.residual,
        }
