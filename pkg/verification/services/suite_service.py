"""
Suite Service - Suítes nomeadas de verificação.

Cada suíte amostra pontos com um gerador semeado, roda as verificações
de diferenças finitas e de identidades sobre os tubos de referência e
inclui controles negativos que devem ser reprovados.

    simple      SO(3), SL(2,R) elíptico e nilpotente
    restricted  SO(3) fechado vs Newton e o tubo restrito de so3_circle
    tube0       so3_circle e so3r3
    general     so3_isotropic, so3_circle e so3r3
    so3r3       tubo explícito em T*R³, inversão e Bates-Lerman
"""
import logging
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np

from core.domain import ModelConfig, UnsupportedConfigurationError
from core.utils.policy import policy
from gtubes.domain import CotangentGroupPoint, RestrictedTube, SimpleTube, SimpleTubeStrategy
from gtubes.services import MomentumService, RestrictedTubeService, SimpleTubeService
from hamtube.domain import CotangentModel, ModelKind, ModelPoint, PhasePoint
from hamtube.services import (
    BatesLermanService,
    GammaService,
    HamiltonianTubeService,
    ModelBuilder,
    TubeInversionService,
)
from lie.domain import GroupDescriptor
from lie.services import AlgebraService, GroupRegistry
from verification.domain import (
    CheckKind,
    FDConfig,
    SuiteName,
    UnknownSuiteError,
    VerificationReport,
)

from .chart_service import TubeChartService
from .fd_service import FiniteDifferenceService, SourcePoint

logger = logging.getLogger(__name__)

DEFAULT_POINTS = 20

# Fração dos raios usada na amostragem
_SPREAD = 0.5

# Escala de amostragem para tubos sem raio configurado
_UNBOUNDED_RADIUS = 0.3

_NEGATIVE_FACTOR = 1.01
_NEGATIVE_POINTS = 3
_GROUP_SAMPLES = 3


def sample_ball(rng: np.random.Generator, dimension: int, radius: float) -> np.ndarray:
    """Ponto uniforme na bola fechada de raio radius."""
    if dimension == 0:
        return np.zeros(0)
    direction = rng.normal(size=dimension)
    direction /= np.linalg.norm(direction)
    return direction * radius * rng.uniform() ** (1.0 / dimension)


def random_group_element(descriptor: GroupDescriptor, rng: np.random.Generator, scale: float = 0.5) -> np.ndarray:
    return AlgebraService.exp(descriptor, scale * rng.normal(size=descriptor.dimension))


def _radius(value: float, scale: float) -> float:
    return _SPREAD * value if np.isfinite(value) else _UNBOUNDED_RADIUS * scale


def _point_ids(label: str, count: int) -> List[str]:
    return [f"{label}:{i:03d}" for i in range(count)]


class VerificationSuiteService:
    """
    Execução das suítes nomeadas.
    """

    @staticmethod
    def available() -> List[str]:
        return [suite.value for suite in SuiteName]

    @staticmethod
    def run(
        suite: str,
        seed: Optional[int] = None,
        points: int = DEFAULT_POINTS,
        model: Optional[CotangentModel] = None,
        config: Optional[FDConfig] = None,
    ) -> VerificationReport:
        """
        Executa a suíte pedida.

        Args:
            suite: nome da suíte
            seed: semente do gerador (padrão DEFAULT_SEED)
            points: pontos amostrados por tubo
            model: modelo cotangente que substitui os de referência
                   (suítes tube0, general e so3r3)
            config: configuração de diferenças finitas

        Raises:
            UnknownSuiteError: nome desconhecido
        """
        runners: Dict[str, Callable] = {
            SuiteName.SIMPLE.value: VerificationSuiteService.simple_suite,
            SuiteName.RESTRICTED.value: VerificationSuiteService.restricted_suite,
            SuiteName.TUBE0.value: VerificationSuiteService.tube0_suite,
            SuiteName.GENERAL.value: VerificationSuiteService.general_suite,
            SuiteName.SO3R3.value: VerificationSuiteService.so3r3_suite,
        }
        if suite not in runners:
            raise UnknownSuiteError(suite, VerificationSuiteService.available())

        seed = policy('DEFAULT_SEED') if seed is None else seed
        rng = np.random.default_rng(seed)
        config = config or FDConfig.from_settings()
        if suite in (SuiteName.SIMPLE.value, SuiteName.RESTRICTED.value):
            report = runners[suite](rng, points, config)
        else:
            report = runners[suite](rng, points, config, model)

        logger.info(
            "Suíte %s (seed=%d, pontos=%d): %d registros, %d reprovados",
            suite, seed, points, len(report.records), len(report.failed),
        )
        return report

    # ------------------------------------------------------------------
    # Tubos e modelos de referência
    # ------------------------------------------------------------------

    @staticmethod
    def reference_tubes() -> Dict[str, SimpleTube]:
        so3, sl2 = GroupRegistry.so3(), GroupRegistry.sl2r()
        return {
            'so3': SimpleTubeService.so3_simple_tube(so3, np.array([0.0, 0.0, 1.0])),
            'sl2_elliptic': SimpleTubeService.sl2_simple_tube(sl2, np.array([1.0, 0.0, 0.0])),
            'sl2_nilpotent': SimpleTubeService.sl2_simple_tube(sl2, np.array([0.0, 0.0, 1.0])),
        }

    @staticmethod
    def reference_models(names: Sequence[str], model: Optional[CotangentModel] = None) -> Dict[str, CotangentModel]:
        if model is not None:
            return {model.name: model}
        return {name: ModelBuilder.from_config(ModelConfig.from_source(name)) for name in names}

    # ------------------------------------------------------------------
    # Amostragem
    # ------------------------------------------------------------------

    @staticmethod
    def simple_points(tube: SimpleTube, rng: np.random.Generator, count: int, label: str) -> List[SourcePoint]:
        scale = max(1.0, float(np.linalg.norm(tube.mu)))
        points = []
        for point_id in _point_ids(label, count):
            nu = sample_ball(rng, tube.nu_dimension, _radius(tube.radii.nu, scale))
            lam = sample_ball(rng, tube.lam_dimension, _radius(tube.radii.lam, 1.0))
            points.append((point_id, random_group_element(tube.descriptor, rng), np.concatenate([nu, lam])))
        return points

    @staticmethod
    def restricted_points(rtube: RestrictedTube, rng: np.random.Generator, count: int, label: str) -> List[SourcePoint]:
        splitting = rtube.splitting
        scale = max(1.0, float(np.linalg.norm(rtube.mu)))
        points = []
        for point_id in _point_ids(label, count):
            nu = sample_ball(rng, rtube.simple.nu_dimension, _radius(rtube.radii.nu, scale))
            lam = sample_ball(rng, splitting.o.shape[1], _radius(rtube.radii.lam, 1.0))
            eps = sample_ball(rng, splitting.l.shape[1], _radius(rtube.radii.eps, scale))
            points.append((point_id, random_group_element(rtube.descriptor, rng), np.concatenate([nu, lam, eps])))
        return points

    @staticmethod
    def tube0_points(model: CotangentModel, rng: np.random.Generator, count: int, label: str) -> List[SourcePoint]:
        splitting, radii = model.splitting, model.radii
        m = model.slice_dimension
        points = []
        for point_id in _point_ids(label, count):
            w = np.concatenate([
                sample_ball(rng, splitting.p.shape[1], _SPREAD * radii.nu),
                sample_ball(rng, splitting.o.shape[1], _SPREAD * radii.lam),
                sample_ball(rng, m, _SPREAD * radii.a),
                sample_ball(rng, m, _SPREAD * radii.b),
            ])
            points.append((point_id, random_group_element(model.descriptor, rng), w))
        return points

    @staticmethod
    def model_points(model: CotangentModel, rng: np.random.Generator, count: int, label: str) -> List[SourcePoint]:
        """Pontos (g, w) com w = ModelPoint.flat(), dentro de metade dos raios."""
        dims, radii = model.dimensions, model.radii
        a_radius = _SPREAD * radii.a
        if model.kind == ModelKind.SO3R3:
            a_radius = _SPREAD * min(radii.a, float(np.linalg.norm(model.q)))
        points = []
        for point_id in _point_ids(label, count):
            nu = sample_ball(rng, dims['s'] + dims['p'], _SPREAD * radii.nu)
            point = ModelPoint(
                g=random_group_element(model.descriptor, rng),
                nu_s=nu[:dims['s']],
                nu_p=nu[dims['s']:],
                lam=sample_ball(rng, dims['o'], _SPREAD * radii.lam),
                a=sample_ball(rng, dims['B'], a_radius),
                b=sample_ball(rng, dims['B'], _SPREAD * radii.b),
            )
            points.append((point_id, point.g, point.flat()))
        return points

    @staticmethod
    def group_samples(descriptor: GroupDescriptor, rng: np.random.Generator) -> List[np.ndarray]:
        return [random_group_element(descriptor, rng) for _ in range(_GROUP_SAMPLES)]

    # ------------------------------------------------------------------
    # Suítes
    # ------------------------------------------------------------------

    @staticmethod
    def simple_suite(rng: np.random.Generator, count: int, config: FDConfig) -> VerificationReport:
        fd = FiniteDifferenceService
        report = VerificationReport()
        for name, tube in VerificationSuiteService.reference_tubes().items():
            label = f"simple.{name}"
            descriptor, mu = tube.descriptor, tube.mu
            d = tube.nu_dimension
            points = VerificationSuiteService.simple_points(tube, rng, count, label)
            f, layout, target = TubeChartService.simple_chart(tube)
            identity = np.eye(descriptor.matrix_size)

            # 1. Pullback e controle negativo (E escalado)
            report = report.merge(fd.fd_pullback_check(f, layout, target, points, config, label))
            perturbed, *_ = TubeChartService.simple_chart(tube.perturbed(_NEGATIVE_FACTOR))
            report = report.merge(fd.fd_pullback_check(
                perturbed, layout, target, points[:_NEGATIVE_POINTS], config, label, CheckKind.NEGATIVE_CONTROL,
            ))

            # 2. Equivariâncias
            report = report.merge(fd.equivariance_check(
                f, TubeChartService.left_source, TubeChartService.left_target,
                VerificationSuiteService.group_samples(descriptor, rng), points, config, f"{label}.left",
            ))
            if tube.strategy in (SimpleTubeStrategy.SO3_CLOSED, SimpleTubeStrategy.SL2_ELLIPTIC):
                report = report.merge(fd.equivariance_check(
                    f,
                    VerificationSuiteService._twist_source(tube),
                    VerificationSuiteService._twist_target(descriptor),
                    AlgebraService.subgroup_samples(descriptor, tube.gmu, 4)[1:],
                    points, config, f"{label}.twist",
                ))

            # 3. Momentos: J_L e identidade em h_μ
            report = report.merge(fd.momentum_check(
                f,
                lambda g, w: AlgebraService.Adstar(descriptor, np.linalg.inv(g), layout.momentum(w)),
                lambda image: MomentumService.momentum_JL(descriptor, CotangentGroupPoint(*image)),
                points, config, label,
            ))

            def hmu_residual(g, w, tube=tube, f=f):
                nu_hat = SimpleTubeService.embed_nu(tube, w[:d])
                return MomentumService.hmu_momentum_residual(
                    descriptor, tube.mu, nu_hat, tube.q @ w[d:], CotangentGroupPoint(*f(g, w)), tube.gmu,
                )

            report = report.merge(fd.scalar_check(hmu_residual, points, CheckKind.MOMENTUM, config, f"{label}.hmu"))

            # 4. Concordância com o m₁ numérico
            if tube.strategy != SimpleTubeStrategy.SHIFT and tube.lam_dimension == 2:
                generic_f, *_ = TubeChartService.simple_chart(SimpleTubeService.as_generic(tube))
                report = report.merge(fd.scalar_check(
                    lambda g, w, f=f, generic_f=generic_f: CotangentGroupPoint(*f(g, w)).distance(
                        CotangentGroupPoint(*generic_f(g, w))
                    ),
                    points, CheckKind.AGREEMENT, config, f"{label}.generic",
                ))

            # 5. Linearização e centro
            n = descriptor.dimension

            def expected(direction, tube=tube):
                xi, nu, lam = direction[:n], direction[n:n + d], tube.q @ direction[n + d:]
                return np.concatenate([
                    xi + lam,
                    SimpleTubeService.embed_nu(tube, nu) + AlgebraService.coad(descriptor, lam, mu),
                ])

            report = report.merge(fd.linearization_check(f, layout, target, expected, config, label))
            report = report.merge(fd.scalar_check(
                lambda g, w, f=f, mu=mu: CotangentGroupPoint(*f(g, w)).distance(CotangentGroupPoint(g, mu)),
                [(f"{label}:center", identity, np.zeros(layout.dimension))],
                CheckKind.CENTER, config, label,
            ))
        return report

    @staticmethod
    def _twist_source(tube: SimpleTube):
        """h·(g, ν, λ) = (g h⁻¹, Ad*_{h⁻¹} ν, Ad_h λ) em coordenadas de g_μ* e q."""
        descriptor, d = tube.descriptor, tube.nu_dimension

        def action(h, point):
            g, w = point
            h_inv = np.linalg.inv(h)
            nu_hat = AlgebraService.Adstar(descriptor, h_inv, SimpleTubeService.embed_nu(tube, w[:d]))
            lam = AlgebraService.Ad(descriptor, h, tube.q @ w[d:])
            lam_coords, *_ = np.linalg.lstsq(tube.q, lam, rcond=None)
            return g @ h_inv, np.concatenate([tube.gmu.T @ nu_hat, lam_coords])

        return action

    @staticmethod
    def _twist_target(descriptor: GroupDescriptor):
        def action(h, image):
            point = MomentumService.right_action(descriptor, h, CotangentGroupPoint(*image))
            return point.g, point.nu

        return action

    @staticmethod
    def restricted_suite(rng: np.random.Generator, count: int, config: FDConfig) -> VerificationReport:
        fd = FiniteDifferenceService
        closed = RestrictedTubeService.so3_restricted_tube(
            GroupRegistry.so3(), np.array([0.0, 0.0, 1.0]), np.array([1.0, 0.0, 0.0]),
        )
        circle = VerificationSuiteService.reference_models(['so3_circle'])['so3_circle'].restricted
        tubes = {
            'so3_closed': closed,
            'so3_newton': RestrictedTubeService.as_newton(closed),
            'so3_circle': circle,
        }

        report = VerificationReport()
        closed_f, *_ = TubeChartService.restricted_chart(closed)
        for name, rtube in tubes.items():
            label = f"restricted.{name}"
            descriptor = rtube.descriptor
            d, k = rtube.simple.nu_dimension, rtube.splitting.o.shape[1]
            points = VerificationSuiteService.restricted_points(rtube, rng, count, label)
            f, layout, target = TubeChartService.restricted_chart(rtube)

            # 1. J_R(Φ)|_l = −ε
            report = report.merge(fd.scalar_check(
                lambda g, w, f=f, rtube=rtube, d=d, k=k: RestrictedTubeService.restricted_momentum_residual(
                    rtube, CotangentGroupPoint(*f(g, w)), w[d + k:],
                ),
                points, CheckKind.RESTRICTED_MOMENTUM, config, label,
            ))

            # 2. Pullback, controle negativo e equivariância à esquerda
            report = report.merge(fd.fd_pullback_check(f, layout, target, points, config, label))
            report = report.merge(fd.fd_pullback_check(
                TubeChartService.scaled_output(f, _NEGATIVE_FACTOR), layout, target,
                points[:_NEGATIVE_POINTS], config, label, CheckKind.NEGATIVE_CONTROL,
            ))
            report = report.merge(fd.equivariance_check(
                f, TubeChartService.left_source, TubeChartService.left_target,
                VerificationSuiteService.group_samples(descriptor, rng), points, config, label,
            ))

            # 3. Centro
            identity = np.eye(descriptor.matrix_size)
            report = report.merge(fd.scalar_check(
                lambda g, w, f=f, mu=rtube.mu: CotangentGroupPoint(*f(g, w)).distance(CotangentGroupPoint(g, mu)),
                [(f"{label}:center", identity, np.zeros(layout.dimension))],
                CheckKind.CENTER, config, label,
            ))

            # 4. Newton contra a fórmula fechada
            if name == 'so3_newton':
                report = report.merge(fd.scalar_check(
                    lambda g, w, f=f: CotangentGroupPoint(*f(g, w)).distance(CotangentGroupPoint(*closed_f(g, w))),
                    points, CheckKind.AGREEMENT, config, f"{label}.closed",
                ))
        return report

    @staticmethod
    def tube0_suite(
        rng: np.random.Generator,
        count: int,
        config: FDConfig,
        model: Optional[CotangentModel] = None,
    ) -> VerificationReport:
        fd = FiniteDifferenceService
        report = VerificationReport()
        for name, current in VerificationSuiteService.reference_models(['so3_circle', 'so3r3'], model).items():
            label = f"tube0.{name}"
            descriptor = current.descriptor
            m = current.slice_dimension
            points = VerificationSuiteService.tube0_points(current, rng, count, label)
            f, layout, target = TubeChartService.tube0_chart(current)
            n_nu = layout.dimension - 2 * m

            def phase_of(image, m=m):
                g, w = image
                return PhasePoint.representative(g, w[:w.size - 2 * m], w[w.size - 2 * m:w.size - m], w[w.size - m:])

            # 1. Pullback e controle negativo
            report = report.merge(fd.fd_pullback_check(f, layout, target, points, config, label))
            report = report.merge(fd.fd_pullback_check(
                TubeChartService.scaled_output(f, _NEGATIVE_FACTOR), layout, target,
                points[:_NEGATIVE_POINTS], config, label, CheckKind.NEGATIVE_CONTROL,
            ))

            # 2. Momento em forma normal e pertinência a J_{H^T}⁻¹(0)
            report = report.merge(fd.momentum_check(
                f,
                lambda g, w, layout=layout: AlgebraService.Adstar(descriptor, np.linalg.inv(g), layout.momentum(w)),
                lambda image, current=current, phase_of=phase_of: HamiltonianTubeService.phase_momentum(
                    current, phase_of(image),
                ),
                points, config, label,
            ))
            report = report.merge(fd.scalar_check(
                lambda g, w, f=f, current=current, phase_of=phase_of: HamiltonianTubeService.membership_residual(
                    current, phase_of(f(g, w)),
                ),
                points, CheckKind.MEMBERSHIP, config, label,
            ))

            # 3. Equivariância à esquerda e centro
            report = report.merge(fd.equivariance_check(
                f, TubeChartService.left_source, TubeChartService.left_target,
                VerificationSuiteService.group_samples(descriptor, rng), points, config, label,
            ))
            center = PhasePoint.representative(np.eye(descriptor.matrix_size), current.mu, np.zeros(m), np.zeros(m))
            report = report.merge(fd.scalar_check(
                lambda g, w, f=f, center=center, phase_of=phase_of: phase_of(f(g, w)).distance(center),
                [(f"{label}:center", np.eye(descriptor.matrix_size), np.zeros(n_nu + 2 * m))],
                CheckKind.CENTER, config, label,
            ))
        return report

    @staticmethod
    def general_suite(
        rng: np.random.Generator,
        count: int,
        config: FDConfig,
        model: Optional[CotangentModel] = None,
    ) -> VerificationReport:
        fd = FiniteDifferenceService
        report = VerificationReport()
        models = VerificationSuiteService.reference_models(['so3_isotropic', 'so3_circle', 'so3r3'], model)
        for name, current in models.items():
            label = f"general.{name}"
            descriptor = current.descriptor
            dims = current.dimensions
            m = current.slice_dimension
            points = VerificationSuiteService.model_points(current, rng, count, label)
            f, layout, target = TubeChartService.general_chart(current)

            def point_of(g, w, current=current):
                return ModelPoint.from_flat(current, g, w)

            def phase_of(image, m=m):
                g, w = image
                return PhasePoint.representative(g, w[:w.size - 2 * m], w[w.size - 2 * m:w.size - m], w[w.size - m:])

            # 1. Pullback e controle negativo
            report = report.merge(fd.fd_pullback_check(f, layout, target, points, config, label))
            report = report.merge(fd.fd_pullback_check(
                TubeChartService.scaled_output(f, _NEGATIVE_FACTOR), layout, target,
                points[:_NEGATIVE_POINTS], config, label, CheckKind.NEGATIVE_CONTROL,
            ))

            # 2. Momento, pertinência e equivariância
            report = report.merge(fd.momentum_check(
                f,
                lambda g, w, current=current, point_of=point_of: HamiltonianTubeService.model_momentum(
                    current, point_of(g, w),
                ),
                lambda image, current=current, phase_of=phase_of: HamiltonianTubeService.phase_momentum(
                    current, phase_of(image),
                ),
                points, config, label,
            ))
            report = report.merge(fd.scalar_check(
                lambda g, w, f=f, current=current, phase_of=phase_of: HamiltonianTubeService.membership_residual(
                    current, phase_of(f(g, w)),
                ),
                points, CheckKind.MEMBERSHIP, config, label,
            ))
            report = report.merge(fd.equivariance_check(
                f, TubeChartService.left_source, TubeChartService.left_target,
                VerificationSuiteService.group_samples(descriptor, rng), points, config, label,
            ))

            # 3. Contrato de Γ
            if dims['s']:
                def gamma_residual(g, w, current=current, point_of=point_of):
                    point = point_of(g, w)
                    gamma = GammaService.gamma_eval(current, point.nu_s, point.b)
                    return max(GammaService.gamma_residual(current, point.nu_s, point.b, gamma).values())

                report = report.merge(fd.scalar_check(gamma_residual, points, CheckKind.GAMMA, config, label))

            # 4. Ida e volta pela inversão
            def roundtrip(g, w, current=current, point_of=point_of):
                phase = TubeInversionService.forward(current, point_of(g, w))
                recovered = TubeInversionService.tube_invert(current, phase)
                return TubeInversionService.forward(current, recovered).distance(phase)

            report = report.merge(fd.scalar_check(roundtrip, points, CheckKind.ROUNDTRIP, config, label))

            # 5. Para α = 0 o tubo geral coincide com T₀
            if not np.any(current.alpha) and dims['s'] == 0:
                def tube0_agreement(g, w, current=current, point_of=point_of):
                    point = point_of(g, w)
                    data = current.slice_data
                    general = HamiltonianTubeService.evaluate_unchecked(current, point)
                    tube0 = HamiltonianTubeService.tube0_eval(
                        current, g, point.nu_p, point.lam, data.embed_a(point.a), data.embed_b(point.b),
                    )
                    return general.distance(tube0)

                report = report.merge(fd.scalar_check(
                    tube0_agreement, points, CheckKind.AGREEMENT, config, f"{label}.tube0",
                ))

            # 6. Centro
            report = report.merge(fd.scalar_check(
                lambda g, w, current=current, point_of=point_of: TubeInversionService.forward(
                    current, point_of(g, w),
                ).distance(HamiltonianTubeService.center(current)),
                [(f"{label}:center", np.eye(descriptor.matrix_size), ModelPoint.center(current).flat())],
                CheckKind.CENTER, config, label,
            ))
        return report

    @staticmethod
    def so3r3_suite(
        rng: np.random.Generator,
        count: int,
        config: FDConfig,
        model: Optional[CotangentModel] = None,
    ) -> VerificationReport:
        fd = FiniteDifferenceService
        current = model or VerificationSuiteService.reference_models(['so3r3'])['so3r3']
        if current.kind != ModelKind.SO3R3:
            raise UnsupportedConfigurationError(f"suíte so3r3 exige o modelo so3r3 (recebido {current.kind.value})")
        label = f"so3r3.{current.name}"
        descriptor = current.descriptor
        gmu = current.splitting.gmu
        d = gmu.shape[1]

        # ModelPoint.flat() = (ν_p, a, b): s e o são vazios
        points = VerificationSuiteService.model_points(current, rng, count, label)
        f, layout, target = TubeChartService.so3r3_chart(current)
        report = VerificationReport()

        def explicit(g, w) -> PhasePoint:
            return HamiltonianTubeService.so3_r3_tube_eval(current, g, w[:d], w[d:d + 1], w[d + 1:])

        # 1. Pullback da forma canônica de T*R³ e controle negativo
        report = report.merge(fd.fd_pullback_check(f, layout, target, points, config, label))
        negative, *_ = TubeChartService.so3r3_chart(current, scale=_NEGATIVE_FACTOR)
        report = report.merge(fd.fd_pullback_check(
            negative, layout, target, points[:_NEGATIVE_POINTS], config, label, CheckKind.NEGATIVE_CONTROL,
        ))

        # 2. Q × P = Ad*_{g⁻¹}(ν + μ)
        report = report.merge(fd.momentum_check(
            f,
            lambda g, w: AlgebraService.Adstar(descriptor, np.linalg.inv(g), layout.momentum(w)),
            lambda image: np.cross(image[1][:3], image[1][3:]),
            points, config, label,
        ))

        # 3. Centro e concordância com o tubo geral projetado
        report = report.merge(fd.scalar_check(
            lambda g, w: explicit(g, w).distance(HamiltonianTubeService.center(current)),
            [(f"{label}:center", np.eye(3), np.zeros(d + 2))],
            CheckKind.CENTER, config, label,
        ))

        def general_agreement(g, w):
            phase = TubeInversionService.forward(current, ModelPoint.from_flat(current, g, w))
            return explicit(g, w).distance(phase)

        report = report.merge(fd.scalar_check(general_agreement, points, CheckKind.AGREEMENT, config, f"{label}.general"))

        # 4. Inversão
        def roundtrip(g, w):
            phase = explicit(g, w)
            recovered = TubeInversionService.tube_invert(current, phase)
            return TubeInversionService.forward(current, recovered).distance(phase)

        report = report.merge(fd.scalar_check(roundtrip, points, CheckKind.ROUNDTRIP, config, label))

        # 5. Bates-Lerman: Z ⊂ J⁻¹(μ) e pontos amostrados de J⁻¹(μ)
        mu_hat = current.mu / np.linalg.norm(current.mu)
        inclusion_points = []
        for point_id, _, w in points:
            g = AlgebraService.exp(descriptor, rng.uniform(-np.pi, np.pi) * mu_hat)
            inclusion_points.append((point_id, g, np.concatenate([np.zeros(d), w[d:]])))

        def inclusion(g, w):
            result = BatesLermanService.bates_lerman_predicate(current, ModelPoint.from_flat(current, g, w))
            return result.momentum_residual if result.holds else np.inf

        report = report.merge(fd.scalar_check(
            inclusion, inclusion_points, CheckKind.BATES_LERMAN, config, f"{label}.inclusion",
        ))

        level_points = [
            (point_id, None, phase.components())
            for point_id, phase in zip(
                _point_ids(f"{label}.level_set", count),
                BatesLermanService.sample_level_set(current, count, rng),
            )
        ]

        def consistency(_, w):
            _, result, roundtrip_residual = BatesLermanService.level_set_consistency(
                current, PhasePoint.cotangent(w[:3], w[3:]),
            )
            if not result.holds:
                return np.inf
            return max(roundtrip_residual, *result.residuals.values())

        report = report.merge(fd.scalar_check(
            consistency, level_points, CheckKind.ROUNDTRIP, config, f"{label}.level_set",
        ))
        return report
