"""
Chart Service - Cartas, formas do modelo e ações para cada tipo de tubo.

Cada construtor devolve (f, layout, target): o mapa em carta, a carta da
fonte com sua forma e a carta canônica do alvo.
"""
from typing import Tuple

import numpy as np
from scipy.linalg import block_diag

from gtubes.domain import RestrictedTube, SimpleTube
from gtubes.services import RestrictedTubeService, SimpleTubeService
from hamtube.domain import CotangentModel, ModelPoint
from hamtube.services import HamiltonianTubeService
from splitting.domain import OmegaForm
from splitting.services import SliceService
from verification.domain import ModelChartLayout, TargetChart

from .fd_service import ChartMap


def _pair_form(m: int) -> np.ndarray:
    """Forma ⟨ẏ₂, ẋ₁⟩ − ⟨ẏ₁, ẋ₂⟩ em coordenadas (x, y)."""
    identity = np.eye(m)
    return np.block([[np.zeros((m, m)), identity], [-identity, np.zeros((m, m))]])


class TubeChartService:

    @staticmethod
    def simple_chart(tube: SimpleTube) -> Tuple[ChartMap, ModelChartLayout, TargetChart]:
        """w = (ν ∈ g_μ*, λ ∈ q) ↦ Θ(g, ν, λ)."""
        descriptor = tube.descriptor
        d, k = tube.nu_dimension, tube.lam_dimension

        def f(g, w):
            point = SimpleTubeService.evaluate_embedded(
                tube, g, SimpleTubeService.embed_nu(tube, w[:d]), tube.q @ w[d:],
            )
            return point.g, point.nu

        def momentum(w):
            return tube.mu + SimpleTubeService.embed_nu(tube, w[:d])

        omega = OmegaForm.from_mu(descriptor, tube.mu)
        form = block_diag(np.zeros((d, d)), omega.restricted(tube.q, tube.q))
        return f, ModelChartLayout(descriptor, d + k, momentum, form), TargetChart(descriptor, 0)

    @staticmethod
    def restricted_chart(rtube: RestrictedTube) -> Tuple[ChartMap, ModelChartLayout, TargetChart]:
        """w = (ν ∈ g_μ*, λ ∈ o, ε ∈ l*) ↦ Φ(g, ν, λ; ε); sem termos em ε̇."""
        descriptor, splitting = rtube.descriptor, rtube.splitting
        d = rtube.simple.nu_dimension
        k, e = splitting.o.shape[1], splitting.l.shape[1]

        def f(g, w):
            nu_hat = SimpleTubeService.embed_nu(rtube.simple, w[:d])
            point = RestrictedTubeService.evaluate_embedded(rtube, g, nu_hat, w[d:d + k], w[d + k:])
            return point.g, point.nu

        def momentum(w):
            return rtube.mu + SimpleTubeService.embed_nu(rtube.simple, w[:d])

        form = block_diag(np.zeros((d, d)), splitting.omega.restricted(splitting.o, splitting.o), np.zeros((e, e)))
        return f, ModelChartLayout(descriptor, d + k + e, momentum, form), TargetChart(descriptor, 0)

    @staticmethod
    def tube0_chart(model: CotangentModel) -> Tuple[ChartMap, ModelChartLayout, TargetChart]:
        """w = (ν ∈ p*, λ ∈ o, a ∈ S, b ∈ S*) ↦ T₀."""
        splitting = model.splitting
        d, k, m = splitting.p.shape[1], splitting.o.shape[1], model.slice_dimension

        def split(w):
            return w[:d], w[d:d + k], w[d + k:d + k + m], w[d + k + m:]

        def f(g, w):
            phase = HamiltonianTubeService.tube0_eval(model, g, *split(w))
            return phase.g, np.concatenate([phase.nu, phase.a, phase.b])

        def momentum(w):
            return model.mu + HamiltonianTubeService.tube0_covector(model, *split(w))

        form = block_diag(
            np.zeros((d, d)),
            splitting.omega.restricted(splitting.o, splitting.o),
            _pair_form(m),
        )
        layout = ModelChartLayout(model.descriptor, d + k + 2 * m, momentum, form)
        return f, layout, TargetChart(model.descriptor, m)

    @staticmethod
    def general_chart(model: CotangentModel) -> Tuple[ChartMap, ModelChartLayout, TargetChart]:
        """w = (ν_s, ν_p, λ, a, b) ↦ representante do tubo geral."""
        dims = model.dimensions
        head = dims['s'] + dims['p']

        def f(g, w):
            phase = HamiltonianTubeService.evaluate_unchecked(model, ModelPoint.from_flat(model, g, w))
            return phase.g, np.concatenate([phase.nu, phase.a, phase.b])

        def momentum(w):
            point = ModelPoint.from_flat(model, np.eye(model.descriptor.matrix_size), w)
            return model.mu + HamiltonianTubeService.general_covector(model, point)

        form = block_diag(np.zeros((head, head)), SliceService.slice_form(model.splitting, model.slice_data))
        layout = ModelChartLayout(model.descriptor, head + dims['o'] + 2 * dims['B'], momentum, form)
        return f, layout, TargetChart(model.descriptor, model.slice_dimension)

    @staticmethod
    def so3r3_chart(model: CotangentModel, scale: float = 1.0) -> Tuple[ChartMap, ModelChartLayout, TargetChart]:
        """
        w = (ν ∈ g_μ*, a, b) ↦ (Q, P) ∈ T*R³.

        scale ≠ 1 multiplica P (controle negativo).
        """
        d = model.splitting.gmu.shape[1]

        def f(g, w):
            phase = HamiltonianTubeService.so3_r3_tube_eval(model, g, w[:d], w[d:d + 1], w[d + 1:])
            return None, np.concatenate([phase.Q, scale * phase.P])

        def momentum(w):
            return model.mu + HamiltonianTubeService.embed_covector(model, model.splitting.gmu, w[:d])

        form = block_diag(np.zeros((d, d)), _pair_form(1))
        return f, ModelChartLayout(model.descriptor, d + 2, momentum, form), TargetChart(None, 3)

    # ------------------------------------------------------------------
    # Ações
    # ------------------------------------------------------------------

    @staticmethod
    def left_source(h, point):
        g, w = point
        return h @ g, w

    @staticmethod
    def left_target(h, image):
        g, w = image
        if g is None:
            m = w.size // 2
            return None, np.concatenate([h @ w[:m], h @ w[m:]])
        return h @ g, w

    @staticmethod
    def scaled_output(f: ChartMap, factor: float) -> ChartMap:
        """Mapa com a parte não-grupo da imagem multiplicada por factor (controle negativo)."""
        def perturbed(g, w):
            g_out, w_out = f(g, w)
            return g_out, factor * w_out

        return perturbed
