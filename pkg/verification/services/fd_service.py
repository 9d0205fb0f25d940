"""
FD Service - Motor de diferenças finitas e verificações genéricas.

Um mapa é uma função f(g, w) -> (g', w') entre cartas; g ou g' podem ser
None quando a carta não tem fator de grupo. Pontos são triplas
(point_id, g, w).
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from core.domain.exceptions import DomainExitError
from core.utils.policy import policy
from lie.services import AlgebraService
from verification.domain import (
    CheckKind,
    CheckRecord,
    FDConfig,
    ModelChartLayout,
    TargetChart,
    VerificationReport,
)

logger = logging.getLogger(__name__)

ChartPoint = Tuple[Optional[np.ndarray], np.ndarray]
SourcePoint = Tuple[str, Optional[np.ndarray], np.ndarray]
ChartMap = Callable[[Optional[np.ndarray], np.ndarray], ChartPoint]


def map_points(function: Callable, items: Sequence, threads: Optional[int] = None) -> List:
    """Aplica function a cada item, em paralelo se THREADS > 1, preservando a ordem."""
    threads = policy('THREADS') if threads is None else threads
    if threads <= 1 or len(items) <= 1:
        return [function(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as executor:
        return list(executor.map(function, items))


def _components(point: ChartPoint) -> np.ndarray:
    g, w = point
    return np.concatenate([g.ravel(), w]) if g is not None else np.asarray(w, dtype=float)


class FiniteDifferenceService:
    """
    Jacobianas em carta, formas e verificações.
    """

    # ------------------------------------------------------------------
    # Cartas e derivadas
    # ------------------------------------------------------------------

    @staticmethod
    def perturb(layout: ModelChartLayout, g, w: np.ndarray, direction: np.ndarray, t: float) -> ChartPoint:
        n = layout.group_dimension
        if layout.descriptor is None:
            return None, w + t * direction
        return g @ AlgebraService.exp(layout.descriptor, t * direction[:n]), w + t * direction[n:]

    @staticmethod
    def directional_derivative(
        f: ChartMap,
        layout: ModelChartLayout,
        target: TargetChart,
        g,
        w: np.ndarray,
        direction: np.ndarray,
        step: float,
        image: Optional[ChartPoint] = None,
    ) -> np.ndarray:
        """Vetor tangente no alvo: (ξ', ẇ') com ξ' = vee(g'⁻¹ ġ')."""
        plus = f(*FiniteDifferenceService.perturb(layout, g, w, direction, step))
        minus = f(*FiniteDifferenceService.perturb(layout, g, w, direction, -step))
        w_dot = (plus[1] - minus[1]) / (2 * step)
        if target.descriptor is None:
            return w_dot
        g_out = (image or f(g, w))[0]
        g_dot = (plus[0] - minus[0]) / (2 * step)
        xi = target.descriptor.from_matrix(np.linalg.solve(g_out, g_dot))
        return np.concatenate([xi, w_dot])

    # ------------------------------------------------------------------
    # Formas
    # ------------------------------------------------------------------

    @staticmethod
    def target_form(target: TargetChart, image: ChartPoint, u: np.ndarray, v: np.ndarray) -> float:
        """Forma canônica do alvo no ponto image."""
        m = target.pair_dimension
        value = 0.0
        if target.descriptor is not None:
            descriptor = target.descriptor
            n = descriptor.dimension
            nu = image[1][:n]
            xi_u, xi_v = u[:n], v[:n]
            nu_u, nu_v = u[n:2 * n], v[n:2 * n]
            value += float(nu_v @ xi_u - nu_u @ xi_v + nu @ AlgebraService.bracket(descriptor, xi_u, xi_v))
            u, v = u[2 * n:], v[2 * n:]
        if m:
            x_u, y_u = u[:m], u[m:2 * m]
            x_v, y_v = v[:m], v[m:2 * m]
            value += float(y_v @ x_u - y_u @ x_v)
        return value

    @staticmethod
    def model_form(layout: ModelChartLayout, w: np.ndarray, u: np.ndarray, v: np.ndarray, step: float) -> float:
        """Forma do modelo (ver ModelChartLayout) no ponto de carta w."""
        n = layout.group_dimension
        value = float(u[n:] @ layout.form @ v[n:])
        if layout.descriptor is None or layout.momentum is None:
            return value

        def momentum_derivative(direction: np.ndarray) -> np.ndarray:
            return (layout.momentum(w + step * direction) - layout.momentum(w - step * direction)) / (2 * step)

        xi_u, xi_v = u[:n], v[:n]
        W = layout.momentum(w)
        value += float(
            momentum_derivative(v[n:]) @ xi_u
            - momentum_derivative(u[n:]) @ xi_v
            + W @ AlgebraService.bracket(layout.descriptor, xi_u, xi_v)
        )
        return value

    @staticmethod
    def pullback_residual(
        f: ChartMap,
        layout: ModelChartLayout,
        target: TargetChart,
        g,
        w: np.ndarray,
        step: float,
    ) -> float:
        """max |ω_alvo(J e_i, J e_j) − Ω_modelo(e_i, e_j)| sobre pares da base da carta."""
        basis = np.eye(layout.tangent_dimension)
        image = f(g, w)
        tangents = [
            FiniteDifferenceService.directional_derivative(f, layout, target, g, w, basis[i], step, image)
            for i in range(basis.shape[0])
        ]
        residual = 0.0
        for i in range(basis.shape[0]):
            for j in range(i + 1, basis.shape[0]):
                pulled = FiniteDifferenceService.target_form(target, image, tangents[i], tangents[j])
                model = FiniteDifferenceService.model_form(layout, w, basis[i], basis[j], step)
                residual = max(residual, abs(pulled - model))
        return residual

    # ------------------------------------------------------------------
    # Verificações
    # ------------------------------------------------------------------

    @staticmethod
    def _record(point_id: str, kind: CheckKind, residual: float, config: FDConfig, label: str) -> CheckRecord:
        threshold = config.threshold(kind)
        passed = residual > threshold if kind == CheckKind.NEGATIVE_CONTROL else residual < threshold
        if not passed:
            logger.warning("Verificação %s reprovada em %s (resíduo %.3e)", kind.value, point_id, residual)
        return CheckRecord(point_id, f"{label}.{kind.value}" if label else kind.value, float(residual), passed)

    @staticmethod
    def _guarded(point_id: str, kind: CheckKind, label: str, compute: Callable[[], float], config: FDConfig) -> CheckRecord:
        """Executa compute(); saídas de domínio viram registros pulados."""
        try:
            residual = compute()
        except DomainExitError as exc:
            check = f"{label}.{kind.value}" if label else kind.value
            logger.debug("Ponto %s pulado em %s: %s", point_id, check, exc.code)
            return CheckRecord(point_id, check, float('nan'), False, skipped=True, note=exc.code)
        return FiniteDifferenceService._record(point_id, kind, residual, config, label)

    @staticmethod
    def fd_pullback_check(
        f: ChartMap,
        layout: ModelChartLayout,
        target: TargetChart,
        points: Sequence[SourcePoint],
        config: Optional[FDConfig] = None,
        label: str = '',
        kind: CheckKind = CheckKind.PULLBACK,
    ) -> VerificationReport:
        """
        Compara o pullback da forma canônica do alvo com a forma do modelo.

        Com kind = NEGATIVE_CONTROL o registro passa quando o resíduo excede
        o limiar.
        """
        config = config or FDConfig.from_settings()

        def check(point: SourcePoint) -> CheckRecord:
            point_id, g, w = point
            return FiniteDifferenceService._guarded(
                point_id, kind, label,
                lambda: FiniteDifferenceService.pullback_residual(f, layout, target, g, w, config.step),
                config,
            )

        return VerificationReport.of(map_points(check, list(points)))

    @staticmethod
    def equivariance_check(
        f: ChartMap,
        source_action: Callable[[np.ndarray, ChartPoint], ChartPoint],
        target_action: Callable[[np.ndarray, ChartPoint], ChartPoint],
        samples: Sequence[np.ndarray],
        points: Sequence[SourcePoint],
        config: Optional[FDConfig] = None,
        label: str = '',
    ) -> VerificationReport:
        """max ‖f(h·x) − h·f(x)‖∞ sobre as amostras h."""
        config = config or FDConfig.from_settings()

        def residual(g, w) -> float:
            image = f(g, w)
            return max(
                float(np.max(np.abs(
                    _components(f(*source_action(h, (g, w)))) - _components(target_action(h, image))
                )))
                for h in samples
            )

        def check(point: SourcePoint) -> CheckRecord:
            point_id, g, w = point
            return FiniteDifferenceService._guarded(
                point_id, CheckKind.EQUIVARIANCE, label, lambda: residual(g, w), config,
            )

        return VerificationReport.of(map_points(check, list(points)))

    @staticmethod
    def momentum_check(
        f: ChartMap,
        model_momentum: Callable[[Optional[np.ndarray], np.ndarray], np.ndarray],
        target_momentum: Callable[[ChartPoint], np.ndarray],
        points: Sequence[SourcePoint],
        config: Optional[FDConfig] = None,
        label: str = '',
        kind: CheckKind = CheckKind.MOMENTUM,
    ) -> VerificationReport:
        """‖J_alvo(f(x)) − J_modelo(x)‖."""
        config = config or FDConfig.from_settings()

        def check(point: SourcePoint) -> CheckRecord:
            point_id, g, w = point
            return FiniteDifferenceService._guarded(
                point_id, kind, label,
                lambda: float(np.linalg.norm(target_momentum(f(g, w)) - model_momentum(g, w))),
                config,
            )

        return VerificationReport.of(map_points(check, list(points)))

    @staticmethod
    def scalar_check(
        residual: Callable[[Optional[np.ndarray], np.ndarray], float],
        points: Sequence[SourcePoint],
        kind: CheckKind,
        config: Optional[FDConfig] = None,
        label: str = '',
    ) -> VerificationReport:
        """Verificação genérica: residual(g, w) contra o limiar de kind."""
        config = config or FDConfig.from_settings()

        def check(point: SourcePoint) -> CheckRecord:
            point_id, g, w = point
            return FiniteDifferenceService._guarded(point_id, kind, label, lambda: residual(g, w), config)

        return VerificationReport.of(map_points(check, list(points)))

    @staticmethod
    def linearization_check(
        f: ChartMap,
        layout: ModelChartLayout,
        target: TargetChart,
        expected: Callable[[np.ndarray], np.ndarray],
        config: Optional[FDConfig] = None,
        label: str = '',
    ) -> VerificationReport:
        """
        Derivadas direcionais no centro (e, 0) contra o mapa linear esperado.

        expected(direction) devolve o vetor tangente (ξ', ẇ') previsto;
        um registro por direção da base da carta.
        """
        config = config or FDConfig.from_settings()
        g0 = np.eye(layout.descriptor.matrix_size)
        w0 = np.zeros(layout.dimension)
        basis = np.eye(layout.tangent_dimension)

        def check(index: int) -> CheckRecord:
            direction = basis[index]
            return FiniteDifferenceService._guarded(
                f"direction:{index:02d}", CheckKind.LINEARIZATION, label,
                lambda: float(np.max(np.abs(
                    FiniteDifferenceService.directional_derivative(f, layout, target, g0, w0, direction, config.step)
                    - expected(direction)
                ))),
                config,
            )

        return VerificationReport.of(map_points(check, list(range(basis.shape[0]))))
