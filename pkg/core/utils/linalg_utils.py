"""
core/utils/linalg_utils.py

Operações com subespaços representados por matrizes de base (colunas).

Convenções:
    - Uma base de um subespaço de R^n é um array (n, k); k = 0 é permitido
      e representa o subespaço nulo.
    - Decisões de posto usam limiar relativo (settings.HAMTUBE['RANK_RTOL'])
      sobre o maior valor singular.
    - Toda base devolvida é ortonormal (euclidiana) e tem sinal determinístico:
      a entrada de maior módulo de cada coluna é positiva.
"""

from typing import Optional

import numpy as np
import scipy.linalg

from core.utils.policy import policy


def _rtol(rtol: Optional[float]) -> float:
    return policy('RANK_RTOL') if rtol is None else rtol


def empty_basis(n: int) -> np.ndarray:
    """Base do subespaço nulo de R^n."""
    return np.zeros((n, 0))


def orient(basis: np.ndarray) -> np.ndarray:
    """Fixa o sinal de cada coluna: entrada de maior módulo positiva."""
    basis = np.array(basis, dtype=float, copy=True)
    for j in range(basis.shape[1]):
        column = basis[:, j]
        pivot = int(np.argmax(np.abs(column) > np.max(np.abs(column)) * (1 - 1e-9)))
        if column[pivot] < 0:
            basis[:, j] = -column
    return basis


def canonical(basis: np.ndarray) -> np.ndarray:
    """
    Base ortonormal canônica de span(basis).

    Forma escalonada reduzida das linhas seguida de Gram-Schmidt: subespaços
    coordenados saem com a base padrão, e a base depende apenas do subespaço.
    """
    k = basis.shape[1]
    if k == 0:
        return basis
    rows = np.array(basis.T, dtype=float, copy=True)
    pivot_row = 0
    for column in range(rows.shape[1]):
        if pivot_row == k:
            break
        candidate = pivot_row + int(np.argmax(np.abs(rows[pivot_row:, column])))
        if abs(rows[candidate, column]) < 1e-10:
            continue
        rows[[pivot_row, candidate]] = rows[[candidate, pivot_row]]
        rows[pivot_row] /= rows[pivot_row, column]
        for other in range(k):
            if other != pivot_row:
                rows[other] -= rows[other, column] * rows[pivot_row]
        pivot_row += 1
    q, _ = np.linalg.qr(rows.T)
    return orient(q)


def null_space(matrix: np.ndarray, rtol: Optional[float] = None) -> np.ndarray:
    """
    Base ortonormal do núcleo de `matrix` (shape (r, k)).

    Matrizes sem linhas têm núcleo igual a R^k.
    """
    matrix = np.atleast_2d(np.asarray(matrix, dtype=float))
    rows, cols = matrix.shape
    if cols == 0:
        return np.zeros((0, 0))
    if rows == 0 or not np.any(matrix):
        return np.eye(cols)
    return canonical(scipy.linalg.null_space(matrix, rcond=_rtol(rtol)))


def orth(matrix: np.ndarray, rtol: Optional[float] = None) -> np.ndarray:
    """Base ortonormal da imagem (span das colunas) de `matrix`."""
    matrix = np.asarray(matrix, dtype=float)
    if matrix.shape[1] == 0 or not np.any(matrix):
        return empty_basis(matrix.shape[0])
    return canonical(scipy.linalg.orth(matrix, rcond=_rtol(rtol)))


def intersect(u: np.ndarray, v: np.ndarray, rtol: Optional[float] = None) -> np.ndarray:
    """Base ortonormal de span(u) ∩ span(v)."""
    n = u.shape[0]
    if u.shape[1] == 0 or v.shape[1] == 0:
        return empty_basis(n)
    v_orth = orth(v, rtol)
    if v_orth.shape[1] == 0:
        return empty_basis(n)
    outside = u - v_orth @ (v_orth.T @ u)
    coefficients = null_space(outside, rtol)
    if coefficients.shape[1] == 0:
        return empty_basis(n)
    return orth(u @ coefficients, rtol)


def metric_complement(
    v: np.ndarray,
    metric: np.ndarray,
    within: Optional[np.ndarray] = None,
    rtol: Optional[float] = None,
) -> np.ndarray:
    """
    Complemento ortogonal de span(v) em relação à métrica `metric`.

    Se `within` for dado, o complemento é tomado dentro de span(within).
    """
    n = metric.shape[0]
    ambient = np.eye(n) if within is None else within
    if ambient.shape[1] == 0:
        return empty_basis(n)
    if v.shape[1] == 0:
        return orth(ambient, rtol)
    coefficients = null_space(v.T @ metric @ ambient, rtol)
    if coefficients.shape[1] == 0:
        return empty_basis(n)
    return orth(ambient @ coefficients, rtol)


def metric_orthonormalize(v: np.ndarray, metric: np.ndarray) -> np.ndarray:
    """Base de span(v) ortonormal para a métrica (Cholesky da Gram)."""
    if v.shape[1] == 0:
        return v
    gram = v.T @ metric @ v
    upper = scipy.linalg.cholesky(gram, lower=False)
    return scipy.linalg.solve_triangular(upper.T, v.T, lower=True).T


def rank(matrix: np.ndarray, rtol: Optional[float] = None) -> int:
    """Posto numérico com limiar relativo."""
    matrix = np.asarray(matrix, dtype=float)
    if matrix.size == 0:
        return 0
    singular = scipy.linalg.svdvals(matrix)
    if singular[0] == 0.0:
        return 0
    return int(np.sum(singular > _rtol(rtol) * singular[0]))


def projection_residual(basis: np.ndarray, vectors: np.ndarray) -> float:
    """Maior distância (euclidiana) das colunas de `vectors` a span(basis)."""
    vectors = np.atleast_2d(vectors)
    if vectors.shape[1] == 0:
        return 0.0
    if basis.shape[1] == 0:
        return float(np.max(np.linalg.norm(vectors, axis=0)))
    q = orth(basis, rtol=1e-14)
    outside = vectors - q @ (q.T @ vectors)
    return float(np.max(np.linalg.norm(outside, axis=0)))


def subspace_angle(u: np.ndarray, v: np.ndarray) -> float:
    """Maior ângulo principal entre span(u) e span(v); 0 se ambos nulos."""
    if u.shape[1] == 0 and v.shape[1] == 0:
        return 0.0
    if u.shape[1] != v.shape[1]:
        return float(np.pi / 2)
    return float(np.max(scipy.linalg.subspace_angles(u, v)))


def dual_embedding(subspace: np.ndarray, complement: np.ndarray) -> np.ndarray:
    """
    Matriz (n, k) que leva coordenadas de um covetor em span(subspace)*
    ao covetor de R^n que anula span(complement).

    Requer [subspace | complement] inversível.
    """
    n, k = subspace.shape
    frame = np.hstack([subspace, complement])
    if frame.shape[1] != n:
        from core.domain.exceptions import DimensionMismatchError
        raise DimensionMismatchError("soma direta de subespaços", n, frame.shape[1])
    rhs = np.vstack([np.eye(k), np.zeros((n - k, k))])
    return np.linalg.solve(frame.T, rhs)
