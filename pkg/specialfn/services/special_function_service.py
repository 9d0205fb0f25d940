"""
Special Function Service - ℰ e ℱ.

ℰ é resolvida diretamente pela identidade que a define: com t = xℰ(x),
    e^{−t} − 1 + t = x²/2,  sinal(t) = sinal(x).
Escrevendo ψ(t) = t·√f(t) − x com f(t) = 2(e^{−t} − 1 + t)/t², ψ é
estritamente crescente e suave; Newton com salvaguarda de bisseção
converge no intervalo inicial, e scipy.optimize.brentq é o último recurso.
"""
import logging
import math
from typing import Optional

import numpy as np
from scipy.optimize import brentq

from specialfn.domain import (
    ScalarNonConvergenceError,
    ScalarSolveConfig,
    SpecialFunction,
    SpecialFunctionDomainError,
    SpecialValue,
)

logger = logging.getLogger(__name__)

# |t| abaixo disto: f(t) pela série de Taylor
_F_SERIES_RADIUS = 0.1
# |x| abaixo disto: ℰ(x) pela série 1 + x/6 + x²/36
_E_SERIES_RADIUS = 1e-5
# |x| abaixo disto: ℱ(x) pela série 1 + x/6 + 3x²/40 + 5x³/112
_FF_SERIES_RADIUS = 1e-3


def _f_ratio(t: float) -> float:
    """f(t) = 2(e^{−t} − 1 + t)/t², com f(0) = 1."""
    if abs(t) < _F_SERIES_RADIUS:
        # 2 Σ_{k≥0} (−t)^k / (k+2)!
        total, term = 0.0, 0.5
        for k in range(14):
            total += term
            term *= -t / (k + 3)
        return 2.0 * total
    return 2.0 * (math.expm1(-t) + t) / (t * t)


def _f_ratio_prime(t: float) -> float:
    """f'(t); série termo a termo perto de 0."""
    if abs(t) < _F_SERIES_RADIUS:
        # 2 Σ_{k≥1} k (−1)^k t^{k−1} / (k+2)!
        total = 0.0
        factorial = 6.0
        power = 1.0
        for k in range(1, 15):
            total += k * (-1) ** k * power / factorial
            power *= t
            factorial *= k + 3
        return 2.0 * total
    g = math.expm1(-t) + t
    return 2.0 * (-math.expm1(-t)) / (t * t) - 4.0 * g / t ** 3


def _psi(t: float, x: float) -> float:
    return t * math.sqrt(_f_ratio(t)) - x


def _psi_prime(t: float) -> float:
    f = _f_ratio(t)
    return math.sqrt(f) + t * _f_ratio_prime(t) / (2.0 * math.sqrt(f))


class SpecialFunctionService:
    """
    Avaliação de ℰ e ℱ.

    Funções puras e reentrantes.
    """

    @staticmethod
    def e_identity_residual(x: float, value: float) -> float:
        """|e^{−xℰ} − 1 + xℰ − x²/2|."""
        t = x * value
        return abs(math.expm1(-t) + t - 0.5 * x * x)

    @staticmethod
    def e_bracket(x: float):
        """Intervalo [lo, hi] em t com ψ(lo) ≤ 0 ≤ ψ(hi)."""
        if x > 0:
            return 0.0, 1.0 + 0.5 * x * x
        return -max(1.0, 2.0 * math.log(2.0 + x * x)), 0.0

    @staticmethod
    def eval_E(x: float, config: Optional[ScalarSolveConfig] = None) -> float:
        """
        ℰ(x) > 0 com e^{−xℰ(x)} = 1 − xℰ(x) + x²/2, ramo analítico ℰ(0) = 1.

        Raises:
            ScalarNonConvergenceError: se nem Newton nem brentq convergirem
        """
        config = config or ScalarSolveConfig.from_settings()
        x = float(x)
        if not math.isfinite(x):
            raise ScalarNonConvergenceError(f"ℰ({x})", 0, math.inf)
        if abs(x) < _E_SERIES_RADIUS:
            return 1.0 + x / 6.0 + x * x / 36.0

        lo, hi = SpecialFunctionService.e_bracket(x)
        # chute: t ≈ x perto de 0; ramo assintótico x²/2 + 1 para x grande
        t = x if abs(x) < 1.0 else (0.5 * x * x + 1.0 if x > 0 else -math.log(1.0 + 0.5 * x * x) - 1.0)
        t = min(max(t, lo), hi)

        # 1. Newton com salvaguarda de bisseção
        for iteration in range(config.max_iter):
            value = _psi(t, x)
            if value < 0:
                lo = max(lo, t)
            else:
                hi = min(hi, t)
            slope = _psi_prime(t)
            candidate = t - value / slope if slope > 0 else 0.5 * (lo + hi)
            if not (lo < candidate < hi):
                candidate = 0.5 * (lo + hi)
            step = abs(candidate - t)
            t = candidate
            if step <= config.abs_tol * max(1.0, abs(t)):
                logger.debug("ℰ(%g): Newton convergiu em %d iterações", x, iteration + 1)
                return t / x

        # 2. Bisseção robusta
        if config.bracketing:
            lo, hi = SpecialFunctionService.e_bracket(x)
            t, result = brentq(
                _psi, lo, hi, args=(x,), xtol=1e-300, rtol=4 * np.finfo(float).eps,
                maxiter=500, full_output=True,
            )
            if result.converged:
                logger.debug("ℰ(%g): fallback brentq convergiu", x)
                return t / x

        raise ScalarNonConvergenceError(f"ℰ({x})", config.max_iter, abs(_psi(t, x)))

    @staticmethod
    def eval_F(x: float) -> float:
        """
        ℱ(x) = arcsin(√x)/√x para x > 0, arcsinh(√|x|)/√|x| para x < 0.

        Domínio fechado em x = 1 (ℱ(1) = π/2).

        Raises:
            SpecialFunctionDomainError: x > 1 ou não finito
        """
        x = float(x)
        if not math.isfinite(x) or x > 1.0:
            raise SpecialFunctionDomainError('ℱ', x)
        if abs(x) < _FF_SERIES_RADIUS:
            return 1.0 + x / 6.0 + 3.0 * x * x / 40.0 + 5.0 * x ** 3 / 112.0
        root = math.sqrt(abs(x))
        if x > 0:
            return math.asin(root) / root
        return math.asinh(root) / root

    @staticmethod
    def evaluate(function: SpecialFunction, x: float) -> SpecialValue:
        """
        Avalia ℰ ou ℱ e reporta o resíduo da identidade de definição.

        Para ℱ o resíduo é |sin(√x·ℱ) − √x| (x > 0) ou o análogo hiperbólico.
        """
        if function == SpecialFunction.E:
            value = SpecialFunctionService.eval_E(x)
            residual = SpecialFunctionService.e_identity_residual(x, value)
        else:
            value = SpecialFunctionService.eval_F(x)
            root = math.sqrt(abs(x))
            if x > 0:
                residual = abs(math.sin(root * value) - root)
            elif x < 0:
                residual = abs(math.sinh(root * value) - root)
            else:
                residual = abs(value - 1.0)
        return SpecialValue(function=function, x=float(x), value=value, residual=residual)
