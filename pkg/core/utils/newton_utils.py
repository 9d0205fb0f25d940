"""
core/utils/newton_utils.py

Newton amortecido com Jacobiana por diferenças finitas.

Usado pelo tubo restrito (equação implícita para ζ) e pela inversão de
tubos (mínimos quadrados de Gauss-Newton). Sistemas retangulares são
resolvidos por lstsq; passos maiores que o raio de confiança são
encurtados.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NewtonResult:
    x: np.ndarray
    residual_norm: float
    iterations: int
    converged: bool


def fd_jacobian(
    fun: Callable[[np.ndarray], np.ndarray],
    x: np.ndarray,
    step: float = 1e-7,
) -> np.ndarray:
    """Jacobiana por diferenças centrais, coluna a coluna."""
    x = np.asarray(x, dtype=float)
    columns = []
    for i in range(x.size):
        delta = np.zeros_like(x)
        delta[i] = step
        columns.append((fun(x + delta) - fun(x - delta)) / (2 * step))
    if not columns:
        return np.zeros((np.asarray(fun(x)).size, 0))
    return np.column_stack(columns)


def damped_newton(
    fun: Callable[[np.ndarray], np.ndarray],
    x0: np.ndarray,
    tol: float,
    max_iter: int,
    trust_radius: float = np.inf,
    initial_jacobian: Optional[np.ndarray] = None,
    jacobian_step: float = 1e-7,
) -> NewtonResult:
    """
    Resolve fun(x) = 0 (ou min ‖fun(x)‖ se retangular).

    Args:
        fun: resíduo vetorial
        x0: chute inicial
        tol: tolerância absoluta em ‖fun(x)‖
        max_iter: limite de iterações
        trust_radius: norma máxima de cada passo
        initial_jacobian: Jacobiana usada na primeira iteração (opcional)
        jacobian_step: passo das diferenças finitas

    Returns:
        NewtonResult com o melhor iterado encontrado
    """
    x = np.array(x0, dtype=float, copy=True)
    residual = np.asarray(fun(x), dtype=float)
    norm = float(np.linalg.norm(residual))
    best_x, best_norm = x.copy(), norm

    for iteration in range(max_iter):
        if norm < tol:
            return NewtonResult(x, norm, iteration, True)

        if iteration == 0 and initial_jacobian is not None:
            jacobian = initial_jacobian
        else:
            jacobian = fd_jacobian(fun, x, jacobian_step)

        step, *_ = np.linalg.lstsq(jacobian, -residual, rcond=None)
        step_norm = float(np.linalg.norm(step))
        if step_norm > trust_radius:
            step *= trust_radius / step_norm

        # Backtracking simples: aceita o primeiro passo que não piora o resíduo
        accepted = False
        for _ in range(8):
            candidate = x + step
            candidate_residual = np.asarray(fun(candidate), dtype=float)
            candidate_norm = float(np.linalg.norm(candidate_residual))
            if np.isfinite(candidate_norm) and candidate_norm <= norm:
                accepted = True
                break
            step *= 0.5

        if not accepted:
            logger.debug("Newton estagnado na iteração %d (‖r‖=%.3e)", iteration, norm)
            break

        x, residual, norm = candidate, candidate_residual, candidate_norm
        logger.debug("Newton it=%d ‖r‖=%.3e", iteration + 1, norm)
        if norm < best_norm:
            best_x, best_norm = x.copy(), norm

    return NewtonResult(best_x, best_norm, max_iter, best_norm < tol)
