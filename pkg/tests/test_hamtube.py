"""
test_hamtube.py — Testes dos tubos hamiltonianos de modelos cotangentes.

Cobre:
  - Configuração de modelos (esquema JSON, factories)
  - Modelo SO(3) em T*R³: exemplo fechado, centro e momento Q × P
  - Γ no modelo com s não trivial
  - Tubo geral: centro, momento e pertinência a J_{H^T}⁻¹(0)
  - Inversão numérica (ida e volta)
  - Predicado de Bates-Lerman
"""
import numpy as np
import pytest

from core.domain import (
    ConfigSchemaError,
    DomainExitError,
    ModelConfig,
    PreconditionError,
    UnsupportedConfigurationError,
)
from factories import ModelConfigFactory
from gtubes.domain import RadiusViolationError
from hamtube.domain import ModelPoint, OutsideTubeImageError, PhasePoint, SingularGammaError
from hamtube.services import (
    BatesLermanService,
    GammaService,
    HamiltonianTubeService,
    ModelBuilder,
    TubeInversionService,
)
from lie.services import AlgebraService

E1, E2, E3 = np.eye(3)


def _circle_point(model):
    return ModelPoint(
        g=AlgebraService.exp(model.descriptor, np.array([0.2, -0.1, 0.3])),
        nu_s=np.zeros(0),
        nu_p=np.array([0.05]),
        lam=np.zeros(0),
        a=np.array([0.1, 0.05]),
        b=np.array([0.02, -0.1]),
    )


def _isotropic_point(model):
    return ModelPoint(
        g=AlgebraService.exp(model.descriptor, np.array([-0.3, 0.1, 0.4])),
        nu_s=np.array([0.05, -0.1]),
        nu_p=np.zeros(0),
        lam=np.zeros(0),
        a=np.array([0.1]),
        b=np.array([0.05]),
    )


class TestConfiguracao:
    """Esquema JSON de modelos."""

    def test_factory_so3r3(self):
        config = ModelConfigFactory()
        assert config.kind == 'so3r3'
        assert config.radius_factor == pytest.approx(0.3)
        np.testing.assert_allclose(config.q, E1)

    def test_factory_circulo(self):
        model = ModelBuilder.from_config(ModelConfigFactory(circle=True))
        assert model.dimensions['B'] == 2 and model.dimensions['l'] == 1

    def test_ida_e_volta_do_documento(self):
        config = ModelConfig.from_source('so3_isotropic')
        again = ModelConfig.from_dict(config.to_dict())
        np.testing.assert_allclose(again.representation, config.representation)
        assert again.radius_factor == config.radius_factor

    @pytest.mark.parametrize('overrides, field', [
        ({'kind': 'toro'}, 'kind'),
        ({'group': 'sl2r'}, 'group'),
        ({'q': [0.0, 0.0, 0.0]}, 'q'),
        ({'radii': {'factor': -1.0}}, 'radii.factor'),
        ({'radii': {'raio': 1.0}}, 'radii'),
        ({'seed': 'zero'}, 'seed'),
    ])
    def test_documento_invalido(self, overrides, field):
        with pytest.raises(ConfigSchemaError) as exc:
            ModelConfigFactory(**overrides)
        assert exc.value.exit_code == 2
        assert field in exc.value.message

    def test_representacao_com_dimensao_errada(self):
        with pytest.raises(ConfigSchemaError):
            ModelConfigFactory(circle=True, alpha=[0.0, 0.0, 0.0])

    def test_tolerancias_sobrescrevem_newton(self):
        model = ModelBuilder.from_config(ModelConfigFactory(circle=True, tolerances={'NEWTON_MAX_ITER': 7}))
        assert model.restricted.newton.max_iter == 7

    def test_raios_explicitos(self):
        model = ModelBuilder.from_config(ModelConfigFactory(radii={'a': 0.05}))
        assert model.radii.a == pytest.approx(0.05)
        assert model.restricted.radii.a == pytest.approx(0.05)


class TestModeloSO3R3:
    """SO(3) agindo em R³."""

    def test_exemplo_fechado(self):
        model = ModelBuilder.so3r3(E1, E2, factor=0.3)
        phase = HamiltonianTubeService.so3_r3_tube_eval(model, np.eye(3), [0.0], [0.1], [0.0])
        np.testing.assert_allclose(phase.Q, [1.1, 0.0, 0.0], atol=1e-14)
        np.testing.assert_allclose(phase.P, [0.0, 1.0 / 1.1, 0.0], atol=1e-14)

    def test_centro_vai_em_q_p(self, so3r3_model):
        phase = HamiltonianTubeService.so3_r3_tube_eval(so3r3_model, np.eye(3), [0.0], [0.0], [0.0])
        assert phase.distance(HamiltonianTubeService.center(so3r3_model)) < 1e-14
        np.testing.assert_allclose(phase.P, [0.2, 1.0, 0.0], atol=1e-14)

    def test_momento_e_g_vezes_nu_mais_mu(self, so3r3_model):
        g = AlgebraService.exp(so3r3_model.descriptor, np.array([0.5, -0.3, 0.2]))
        nu = np.array([0.1])
        phase = HamiltonianTubeService.so3_r3_tube_eval(so3r3_model, g, nu, [0.2], [0.05])
        nu_hat = HamiltonianTubeService.embed_covector(so3r3_model, so3r3_model.splitting.gmu, nu)
        np.testing.assert_allclose(
            HamiltonianTubeService.phase_momentum(so3r3_model, phase), g @ (nu_hat + so3r3_model.mu), atol=1e-13,
        )

    def test_concorda_com_tubo_geral(self, so3r3_model):
        g = AlgebraService.exp(so3r3_model.descriptor, np.array([0.1, 0.2, -0.4]))
        point = ModelPoint(g, np.zeros(0), np.array([0.05]), np.zeros(0), np.array([0.1]), np.array([0.02]))
        general = HamiltonianTubeService.phase_map(
            so3r3_model, HamiltonianTubeService.general_tube_eval(so3r3_model, point),
        )
        closed = HamiltonianTubeService.so3_r3_tube_eval(so3r3_model, g, point.nu_p, point.a, point.b)
        assert general.distance(closed) < 1e-12

    @pytest.mark.parametrize('a', [1.0, 1.2, -1.0])
    def test_raio_de_palais(self, a):
        model = ModelBuilder.so3r3(E1, E2, factor=5.0)
        with pytest.raises(DomainExitError) as exc:
            HamiltonianTubeService.so3_r3_tube_eval(model, np.eye(3), [0.0], [a], [0.0])
        assert isinstance(exc.value, RadiusViolationError)
        assert exc.value.exit_code == 3

    def test_momento_nulo_e_rejeitado(self):
        with pytest.raises(PreconditionError):
            ModelBuilder.so3r3(E1, 2 * E1)

    def test_modelo_generico_nao_tem_r3(self, circle_model):
        with pytest.raises(UnsupportedConfigurationError):
            HamiltonianTubeService.so3_r3_tube_eval(circle_model, np.eye(3), [0.0], [0.0], [0.0])


class TestGamma:
    """Γ(ν; b) ⋄_s (b + α) = ν com Γ ∈ C."""

    def test_exemplo_fechado(self, isotropic_model):
        covector = np.array([0.3, -0.7, 0.0])
        values = isotropic_model.slice_data.s.T @ covector
        gamma = GammaService.gamma_eval(isotropic_model, values, np.zeros(1))
        np.testing.assert_allclose(gamma, [0.7, 0.3, 0.0], atol=1e-12)

    @pytest.mark.parametrize('b', [0.0, 0.2, -0.25])
    def test_residuos(self, isotropic_model, b):
        values = np.array([0.04, 0.11])
        gamma = GammaService.gamma_eval(isotropic_model, values, np.array([b]))
        residuals = GammaService.gamma_residual(isotropic_model, values, np.array([b]), gamma)
        assert residuals['equation'] < 1e-12
        assert residuals['C_membership'] < 1e-12

    def test_linear_em_nu(self, isotropic_model):
        b = np.array([0.1])
        first = GammaService.gamma_eval(isotropic_model, np.array([0.1, 0.0]), b)
        second = GammaService.gamma_eval(isotropic_model, np.array([0.0, 0.2]), b)
        total = GammaService.gamma_eval(isotropic_model, np.array([0.1, 0.2]), b)
        np.testing.assert_allclose(total, first + second, atol=1e-14)

    def test_b_singular(self, isotropic_model):
        # b + α = 0 anula o sistema
        b = np.array([-float(isotropic_model.alpha @ isotropic_model.slice_data.B[:, 0])])
        with pytest.raises(SingularGammaError):
            GammaService.gamma_eval(isotropic_model, np.array([0.1, 0.0]), b)

    def test_s_vazio(self, circle_model):
        np.testing.assert_allclose(GammaService.gamma_eval(circle_model, np.zeros(0), np.zeros(2)), np.zeros(2))


class TestTuboGeral:
    """T(g, ν_s, ν_p, λ, a, b) e T₀."""

    @pytest.mark.parametrize('fixture', ['circle_model', 'isotropic_model', 'so3r3_model'])
    def test_centro(self, request, fixture):
        model = request.getfixturevalue(fixture)
        phase = HamiltonianTubeService.general_tube_eval(model, ModelPoint.center(model))
        np.testing.assert_allclose(phase.g, np.eye(model.descriptor.matrix_size), atol=1e-14)
        np.testing.assert_allclose(phase.nu, model.mu, atol=1e-14)
        np.testing.assert_allclose(phase.b, model.alpha, atol=1e-14)

    @pytest.mark.parametrize('fixture, make_point', [
        ('circle_model', _circle_point),
        ('isotropic_model', _isotropic_point),
    ])
    def test_momento_e_pertinencia(self, request, fixture, make_point):
        model = request.getfixturevalue(fixture)
        point = make_point(model)
        phase = HamiltonianTubeService.general_tube_eval(model, point)
        np.testing.assert_allclose(
            HamiltonianTubeService.phase_momentum(model, phase),
            HamiltonianTubeService.model_momentum(model, point),
            atol=1e-10,
        )
        assert HamiltonianTubeService.membership_residual(model, phase) < 1e-10

    def test_equivariancia_a_esquerda(self, circle_model):
        point = _circle_point(circle_model)
        h = AlgebraService.exp(circle_model.descriptor, np.array([0.7, 0.1, -0.2]))
        moved = HamiltonianTubeService.general_tube_eval(circle_model, point.left_translate(h))
        expected = HamiltonianTubeService.general_tube_eval(circle_model, point).left_translate(h)
        assert moved.distance(expected) < 1e-10

    def test_torcao_preserva_momento_e_pertinencia(self, circle_model):
        phase = HamiltonianTubeService.general_tube_eval(circle_model, _circle_point(circle_model))
        twisted = HamiltonianTubeService.twist_action(circle_model, 0.4 * circle_model.h[:, 0], phase)
        np.testing.assert_allclose(
            HamiltonianTubeService.phase_momentum(circle_model, twisted),
            HamiltonianTubeService.phase_momentum(circle_model, phase),
            atol=1e-12,
        )
        assert HamiltonianTubeService.membership_residual(circle_model, twisted) < 1e-10

    def test_tube0_no_modelo_circulo(self, circle_model):
        g = np.eye(3)
        phase = HamiltonianTubeService.tube0_eval(
            circle_model, g, np.array([0.05]), np.zeros(0), np.array([0.1, 0.05]), np.array([0.02, -0.1]),
        )
        np.testing.assert_allclose(
            HamiltonianTubeService.phase_momentum(circle_model, phase),
            HamiltonianTubeService.tube0_momentum(
                circle_model, g, np.array([0.05]), np.zeros(0), np.array([0.1, 0.05]), np.array([0.02, -0.1]),
            ),
            atol=1e-10,
        )
        assert HamiltonianTubeService.membership_residual(circle_model, phase) < 1e-10

    def test_raio_violado(self, circle_model):
        point = _circle_point(circle_model)
        far = ModelPoint(point.g, point.nu_s, point.nu_p, point.lam, np.array([5.0, 0.0]), point.b)
        with pytest.raises(RadiusViolationError):
            HamiltonianTubeService.general_tube_eval(circle_model, far)

    def test_ponto_achatado(self, isotropic_model):
        point = _isotropic_point(isotropic_model)
        again = ModelPoint.from_flat(isotropic_model, point.g, point.flat())
        np.testing.assert_allclose(again.nu_s, point.nu_s)
        np.testing.assert_allclose(again.b, point.b)


class TestInversao:
    """tube_invert ∘ tube = identidade."""

    def test_so3r3(self, so3r3_model):
        g = AlgebraService.exp(so3r3_model.descriptor, np.array([0.3, -0.2, 0.6]))
        point = ModelPoint(g, np.zeros(0), np.array([0.05]), np.zeros(0), np.array([0.1]), np.array([0.02]))
        phase = TubeInversionService.forward(so3r3_model, point)
        inverted = TubeInversionService.tube_invert(so3r3_model, phase)
        assert TubeInversionService.forward(so3r3_model, inverted).distance(phase) < 1e-8
        np.testing.assert_allclose(inverted.a, point.a, atol=1e-8)

    def test_representante_do_circulo(self, circle_model):
        point = _circle_point(circle_model)
        phase = TubeInversionService.forward(circle_model, point)
        inverted = TubeInversionService.tube_invert(circle_model, phase)
        assert TubeInversionService.forward(circle_model, inverted).distance(phase) < 1e-8

    def test_documento_de_fase(self):
        phase = PhasePoint.from_dict({'Q': [1.0, 0.0, 0.0], 'P': [0.2, 1.0, 0.0]})
        assert not phase.is_representative
        assert PhasePoint.from_dict(phase.to_dict()).distance(phase) == 0.0

    def test_momento_nulo_fora_da_imagem(self, so3r3_model):
        with pytest.raises(OutsideTubeImageError):
            TubeInversionService.tube_invert(so3r3_model, PhasePoint.cotangent(E1, E1))


class TestBatesLerman:
    """Z = {g ∈ G_μ, ν = 0, J_N = 0} e J⁻¹(μ)."""

    def test_ponto_de_z(self, so3r3_model):
        g = AlgebraService.exp(so3r3_model.descriptor, 0.7 * E3)
        point = ModelPoint(g, np.zeros(0), np.zeros(1), np.zeros(0), np.array([0.1]), np.array([-0.05]))
        result = BatesLermanService.bates_lerman_predicate(so3r3_model, point)
        assert result.holds
        assert result.momentum_residual < 1e-10

    def test_nu_nao_nulo(self, so3r3_model):
        point = ModelPoint(np.eye(3), np.zeros(0), np.array([0.05]), np.zeros(0), np.zeros(1), np.zeros(1))
        result = BatesLermanService.bates_lerman_predicate(so3r3_model, point)
        assert not result.holds
        assert result.residuals['nu'] == pytest.approx(0.05)
        assert result.to_dict()['momentum_residual'] is None

    def test_g_fora_da_isotropia(self, so3r3_model):
        g = AlgebraService.exp(so3r3_model.descriptor, 0.3 * E1)
        point = ModelPoint(g, np.zeros(0), np.zeros(1), np.zeros(0), np.zeros(1), np.zeros(1))
        assert not BatesLermanService.bates_lerman_predicate(so3r3_model, point).holds

    def test_amostras_de_nivel(self, so3r3_model):
        rng = np.random.default_rng(3)
        for phase in BatesLermanService.sample_level_set(so3r3_model, 3, rng):
            np.testing.assert_allclose(np.cross(phase.Q, phase.P), so3r3_model.mu, atol=1e-13)
            point, result, roundtrip = BatesLermanService.level_set_consistency(so3r3_model, phase)
            assert result.holds, result.residuals
            assert roundtrip < 1e-8

    def test_amostragem_exige_so3r3(self, circle_model, rng):
        with pytest.raises(UnsupportedConfigurationError):
            BatesLermanService.sample_level_set(circle_model, 1, rng)

    def test_coordenadas_gerais_coincidem_com_t0_quando_alpha_nulo(self, circle_model):
        g = AlgebraService.exp(circle_model.descriptor, 0.4 * E3)
        a, b = np.array([0.1, 0.0]), np.array([0.05, 0.0])
        point = ModelPoint(g, np.zeros(0), np.zeros(1), np.zeros(0), a, b)
        result = BatesLermanService.bates_lerman_predicate(circle_model, point)
        assert result.holds, result.residuals
        assert result.momentum_residual < 1e-10

        general = HamiltonianTubeService.general_tube_eval(circle_model, point)
        tube0 = HamiltonianTubeService.tube0_eval(circle_model, g, np.zeros(1), np.zeros(0), a, b)
        for field in ('g', 'nu', 'a', 'b'):
            np.testing.assert_allclose(getattr(general, field), getattr(tube0, field), atol=1e-12)
