"""
Algebra Service - Kernels de álgebra de Lie sobre um GroupDescriptor.

Todas as funções recebem e devolvem arrays numpy em coordenadas:
vetores da álgebra na base declarada, covetores em coordenadas duais.

Responsável por:
- bracket, ad, ad* (coad)
- Ad, Ad* e ação de elementos de grupo
- exp (Padé ou Rodrigues) e dexp trivializado à direita
- produto diamante de representações
- conversões pela forma traço e normas da forma invariante
"""
import logging
from typing import Optional

import numpy as np
import scipy.linalg

from core.utils.policy import policy
from lie.domain import (
    DefiningEquations,
    ExpMethod,
    GroupDescriptor,
    Representation,
    algebra_coordinates,
    group_matrix,
    validate_dimension,
    validate_group_element,
)

logger = logging.getLogger(__name__)

# Abaixo deste |a| os coeficientes fechados de dexp usam série de Taylor
_DEXP_SERIES_THRESHOLD = 1e-3


class AlgebraService:
    """
    Operações de álgebra e grupo.

    Funções puras, sem cache e seguras para uso concorrente.
    Aceitam arrays ou os objetos tipados AlgebraVector, CoalgebraVector e
    GroupElement; para estes o descritor é conferido contra o da operação
    (DescriptorMismatchError).
    """

    # ------------------------------------------------------------------
    # Colchete e representações adjunta/coadjunta
    # ------------------------------------------------------------------

    @staticmethod
    def bracket(descriptor: GroupDescriptor, xi: np.ndarray, eta: np.ndarray) -> np.ndarray:
        """[ξ, η] = Σ c[i,j,k] ξ_i η_j e_k."""
        xi = algebra_coordinates(descriptor, "ξ", xi)
        eta = algebra_coordinates(descriptor, "η", eta)
        return np.einsum('ijk,i,j->k', descriptor.structure_constants, xi, eta)

    @staticmethod
    def ad_matrix(descriptor: GroupDescriptor, xi: np.ndarray) -> np.ndarray:
        """Matriz de ad_ξ: (ad_ξ)[k, j] = Σ_i ξ_i c[i, j, k]."""
        xi = algebra_coordinates(descriptor, "ξ", xi)
        return np.einsum('i,ijk->kj', xi, descriptor.structure_constants)

    @staticmethod
    def coad(descriptor: GroupDescriptor, xi: np.ndarray, mu: np.ndarray) -> np.ndarray:
        """ad*_ξ μ, definido por ⟨ad*_ξ μ, η⟩ = ⟨μ, [ξ, η]⟩."""
        mu = algebra_coordinates(descriptor, "μ", mu)
        return AlgebraService.ad_matrix(descriptor, xi).T @ mu

    @staticmethod
    def coad_matrix(descriptor: GroupDescriptor, mu: np.ndarray) -> np.ndarray:
        """Matriz da aplicação linear ξ ↦ ad*_ξ μ."""
        mu = algebra_coordinates(descriptor, "μ", mu)
        # coluna i: ad*_{e_i} μ, componente j: Σ_k c[i,j,k] μ_k
        return np.einsum('ijk,k->ji', descriptor.structure_constants, mu)

    @staticmethod
    def pairing(nu: np.ndarray, xi: np.ndarray) -> float:
        return float(np.dot(nu, xi))

    # ------------------------------------------------------------------
    # Ação do grupo
    # ------------------------------------------------------------------

    @staticmethod
    def Ad_matrix(descriptor: GroupDescriptor, g: np.ndarray, validate: bool = True) -> np.ndarray:
        """
        Matriz de Ad_g na base declarada.

        Raises:
            InvalidGroupElementError: se g violar as equações do grupo
        """
        g = group_matrix(descriptor, g)
        if validate:
            validate_group_element(descriptor, g)
        if descriptor.name == 'so3' and descriptor.defining_equations == DefiningEquations.ORTHOGONAL:
            # identificação hat: Ad_g ξ = g ξ
            return np.array(g, dtype=float)
        g_inv = np.linalg.inv(g)
        return np.column_stack([
            descriptor.from_matrix(g @ b @ g_inv) for b in descriptor.basis
        ])

    @staticmethod
    def Ad(descriptor: GroupDescriptor, g: np.ndarray, xi: np.ndarray) -> np.ndarray:
        xi = algebra_coordinates(descriptor, "ξ", xi)
        return AlgebraService.Ad_matrix(descriptor, g) @ xi

    @staticmethod
    def Adstar(descriptor: GroupDescriptor, g: np.ndarray, nu: np.ndarray) -> np.ndarray:
        """Ad*_g ν com ⟨Ad*_g ν, ξ⟩ = ⟨ν, Ad_g ξ⟩."""
        nu = algebra_coordinates(descriptor, "ν", nu)
        return AlgebraService.Ad_matrix(descriptor, g).T @ nu

    @staticmethod
    def coadjoint_action(descriptor: GroupDescriptor, g: np.ndarray, nu: np.ndarray) -> np.ndarray:
        """Ação coadjunta à esquerda g·ν = Ad*_{g⁻¹} ν."""
        return AlgebraService.Adstar(descriptor, np.linalg.inv(group_matrix(descriptor, g)), nu)

    # ------------------------------------------------------------------
    # Exponencial
    # ------------------------------------------------------------------

    @staticmethod
    def exp(
        descriptor: GroupDescriptor,
        xi: np.ndarray,
        method: ExpMethod = ExpMethod.PADE,
    ) -> np.ndarray:
        """
        Exponencial matricial de Σ ξ_i B_i.

        PADE usa scipy.linalg.expm (scaling-and-squaring); RODRIGUES é o
        caminho fechado de SO(3), usado como verificação cruzada.
        """
        xi = algebra_coordinates(descriptor, "ξ", xi)
        if method == ExpMethod.RODRIGUES:
            return AlgebraService.rodrigues(xi)
        return scipy.linalg.expm(descriptor.to_matrix(xi))

    @staticmethod
    def rodrigues(omega: np.ndarray) -> np.ndarray:
        """R = I + sinc(θ)·ŵ + ½ sinc(θ/2)²·ŵ², com θ = ‖ω‖."""
        from lie.services.group_registry import hat

        theta = float(np.linalg.norm(omega))
        w = hat(omega)
        # np.sinc(x) = sin(πx)/(πx)
        return (
            np.eye(3)
            + np.sinc(theta / np.pi) * w
            + 0.5 * np.sinc(theta / (2 * np.pi)) ** 2 * (w @ w)
        )

    # ------------------------------------------------------------------
    # dexp trivializado à direita: M(λ) = Σ ad_λ^n / (n+1)!
    # ------------------------------------------------------------------

    @staticmethod
    def ad_cubic_coefficient(descriptor: GroupDescriptor, lam: np.ndarray) -> Optional[float]:
        """
        Retorna a(λ) se ad³_λ + a(λ)·ad_λ = 0, senão None.

        a = −⟨A³, A⟩_F / ⟨A, A⟩_F com A = ad_λ.
        """
        A = AlgebraService.ad_matrix(descriptor, lam)
        norm2 = float(np.sum(A * A))
        if norm2 == 0.0:
            return 0.0
        A3 = A @ A @ A
        a = -float(np.sum(A3 * A)) / norm2
        residual = float(np.max(np.abs(A3 + a * A)))
        scale = norm2 ** 1.5 + 1.0
        return a if residual <= 1e-12 * scale else None

    @staticmethod
    def dexp_coefficients(a: float):
        """
        (c1, c2) com M(λ) = I + c1·ad_λ + c2·ad_λ² quando ad³ = −a·ad.
        """
        if abs(a) < _DEXP_SERIES_THRESHOLD:
            c1 = 0.5 - a / 24 + a ** 2 / 720 - a ** 3 / 40320
            c2 = 1 / 6 - a / 120 + a ** 2 / 5040 - a ** 3 / 362880
            return c1, c2
        if a > 0:
            s = np.sqrt(a)
            return (1 - np.cos(s)) / a, (s - np.sin(s)) / (a * s)
        s = np.sqrt(-a)
        return (np.cosh(s) - 1) / (-a), (np.sinh(s) - s) / (-a * s)

    @staticmethod
    def dexp_right_matrix(descriptor: GroupDescriptor, lam: np.ndarray) -> np.ndarray:
        """Matriz de M(λ); forma fechada se houver relação cúbica, série caso contrário."""
        A = AlgebraService.ad_matrix(descriptor, lam)
        n = descriptor.dimension
        a = AlgebraService.ad_cubic_coefficient(descriptor, lam)
        if a is not None:
            c1, c2 = AlgebraService.dexp_coefficients(a)
            return np.eye(n) + c1 * A + c2 * (A @ A)

        rtol, max_terms = policy('DEXP_RTOL'), policy('DEXP_MAX_TERMS')
        total = np.eye(n)
        term = np.eye(n)
        for k in range(1, max_terms):
            term = term @ A / (k + 1)
            total = total + term
            if np.linalg.norm(term) < rtol * np.linalg.norm(total):
                break
        return total

    @staticmethod
    def dexp_right(descriptor: GroupDescriptor, lam: np.ndarray, v: np.ndarray) -> np.ndarray:
        """
        M(λ)·v, com d/dt exp(λ + t v)|₀ = (M(λ)v)^ · exp(λ).
        """
        v = algebra_coordinates(descriptor, "v", v)
        return AlgebraService.dexp_right_matrix(descriptor, lam) @ v

    # ------------------------------------------------------------------
    # Produto diamante e representações
    # ------------------------------------------------------------------

    @staticmethod
    def diamond(
        representation: Representation,
        a: np.ndarray,
        b: np.ndarray,
        subspace: np.ndarray,
    ) -> np.ndarray:
        """
        (a ⋄ b) restrito a span(subspace): coordenada j = ⟨b, ξ_j·a⟩.

        subspace: (n, k) com colunas em k ⊂ g (subálgebra da representação).
        """
        m = representation.dimension
        a = validate_dimension("a", a, m)
        b = validate_dimension("b", b, m)
        return np.array([
            b @ representation.action(subspace[:, j]) @ a
            for j in range(subspace.shape[1])
        ])

    @staticmethod
    def diamond_matrix(representation: Representation, b: np.ndarray, subspace: np.ndarray) -> np.ndarray:
        """Matriz (k, m) de a ↦ (a ⋄ b)|_subspace."""
        return np.array([
            b @ representation.action(subspace[:, j])
            for j in range(subspace.shape[1])
        ]).reshape(subspace.shape[1], representation.dimension)

    @staticmethod
    def group_action(representation: Representation, xi: np.ndarray) -> np.ndarray:
        """Matriz de exp(ξ) agindo em V, para ξ na subálgebra da representação."""
        return scipy.linalg.expm(representation.action(xi))

    @staticmethod
    def circle_period(descriptor: GroupDescriptor, xi: np.ndarray) -> float:
        """
        Período de t ↦ exp(tξ) quando ξ gera um círculo; inf caso contrário.
        """
        eigenvalues = np.linalg.eigvals(descriptor.to_matrix(xi))
        if np.max(np.abs(eigenvalues.real)) > 1e-10:
            return np.inf
        omega = float(np.max(np.abs(eigenvalues.imag)))
        return 2 * np.pi / omega if omega > 0 else np.inf

    @staticmethod
    def subgroup_samples(descriptor: GroupDescriptor, generators: np.ndarray, count: int):
        """
        Amostras exp(t ξ_j) em grade uniforme de um período de cada gerador.

        Geradores não compactos são amostrados em t ∈ [−1, 1].
        """
        samples = [np.eye(descriptor.matrix_size)]
        for j in range(generators.shape[1]):
            xi = generators[:, j]
            period = AlgebraService.circle_period(descriptor, xi)
            if np.isfinite(period):
                times = np.arange(count) * period / count
            else:
                times = np.linspace(-1.0, 1.0, count)
            samples.extend(AlgebraService.exp(descriptor, t * xi) for t in times[1:])
        return samples

    # ------------------------------------------------------------------
    # Forma invariante
    # ------------------------------------------------------------------

    @staticmethod
    def covector_from_matrix(descriptor: GroupDescriptor, matrix: np.ndarray) -> np.ndarray:
        """μ_i = ⟨M, B_i⟩ pela forma do descritor (identificação g ≅ g*)."""
        return descriptor.gram @ descriptor.from_matrix(matrix)

    @staticmethod
    def matrix_from_covector(descriptor: GroupDescriptor, mu: np.ndarray) -> np.ndarray:
        """Matriz M_μ da álgebra com ⟨μ, ξ⟩ = ⟨M_μ, ξ⟩_forma."""
        return descriptor.to_matrix(AlgebraService.sharp(descriptor, mu))

    @staticmethod
    def sharp(descriptor: GroupDescriptor, mu: np.ndarray) -> np.ndarray:
        """μ♯ ∈ g com ⟨μ♯, ·⟩_forma = μ."""
        return np.linalg.solve(descriptor.gram, algebra_coordinates(descriptor, "μ", mu))

    @staticmethod
    def form_norm2_algebra(descriptor: GroupDescriptor, xi: np.ndarray) -> float:
        """‖ξ‖² = ξᵀ G ξ (indefinido para SL(2,R))."""
        return float(xi @ descriptor.gram @ xi)

    @staticmethod
    def form_norm2_coalgebra(descriptor: GroupDescriptor, mu: np.ndarray) -> float:
        """‖μ‖² = μᵀ G⁻¹ μ."""
        return float(mu @ AlgebraService.sharp(descriptor, mu))
