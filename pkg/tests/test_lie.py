"""
test_lie.py — Testes do núcleo de álgebra de Lie.

Cobre:
  - Constantes de estrutura derivadas da base (SO(3), SL(2,R), JSON)
  - Propriedades do colchete: antissimetria e Jacobi
  - Convenções de Ad, Ad*, ad*
  - exp (Padé e Rodrigues) e pertinência ao grupo
  - dexp trivializado à direita contra diferenças finitas
  - Representações e produto diamante
  - Operandos de grupos diferentes (SO(3) × SL(2,R))
"""
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from core.domain import ConfigSchemaError, DimensionMismatchError, PreconditionError
from lie.domain import (
    DefiningEquations,
    DescriptorMismatchError,
    ExpMethod,
    InvalidGroupElementError,
    InvalidRepresentationError,
    PairingKind,
    Representation,
    membership_residual,
    validate_representation,
)
from lie.services import AlgebraService, GroupRegistry
from lie.services.group_registry import SL2_H, SL2_X, SL2_Y, hat, vee

coordinate = st.floats(min_value=-2.0, max_value=2.0, allow_nan=False, allow_infinity=False)
vector3 = st.lists(coordinate, min_size=3, max_size=3).map(np.array)
group_name = st.sampled_from(['so3', 'sl2r'])


class TestDescritores:
    """Descritores built-in e carregados de JSON."""

    def test_so3_colchete_e_produto_vetorial(self, so3):
        xi, eta = np.array([1.0, 2.0, -0.5]), np.array([0.3, -1.0, 2.0])
        np.testing.assert_allclose(AlgebraService.bracket(so3, xi, eta), np.cross(xi, eta), atol=1e-14)

    def test_sl2r_relacoes_canonicas(self, sl2r):
        h, x, y = np.eye(3)
        # [H, X] = 2X, [H, Y] = −2Y, [X, Y] = H
        np.testing.assert_allclose(AlgebraService.bracket(sl2r, h, x), 2 * x, atol=1e-14)
        np.testing.assert_allclose(AlgebraService.bracket(sl2r, h, y), -2 * y, atol=1e-14)
        np.testing.assert_allclose(AlgebraService.bracket(sl2r, x, y), h, atol=1e-14)

    def test_forma_traco_de_sl2r(self, sl2r):
        # ⟨A, B⟩ = −2 tr(AB): H ↦ −4, X·Y ↦ −2
        expected = np.array([[-4.0, 0.0, 0.0], [0.0, 0.0, -2.0], [0.0, -2.0, 0.0]])
        np.testing.assert_allclose(sl2r.gram, expected, atol=1e-14)

    def test_json_reproduz_constantes_do_builtin(self, so3):
        document = {
            'name': 'so3_json',
            'basis': [hat(e).tolist() for e in np.eye(3)],
            'pairing': 'dual',
            'defining_equations': 'orthogonal',
        }
        loaded = GroupRegistry.load_json(document)
        np.testing.assert_allclose(loaded.structure_constants, so3.structure_constants, atol=1e-14)
        assert loaded.defining_equations == DefiningEquations.ORTHOGONAL

    def test_base_degenerada_e_rejeitada(self):
        basis = np.array([SL2_H, SL2_H, SL2_X])
        with pytest.raises(ConfigSchemaError):
            GroupRegistry.from_basis('ruim', basis, PairingKind.DUAL, DefiningEquations.NONE)

    def test_base_sem_fechamento_e_rejeitada(self):
        # span{X, Y} não é subálgebra: [X, Y] = H
        basis = np.array([SL2_X, SL2_Y])
        with pytest.raises(ConfigSchemaError):
            GroupRegistry.from_basis('aberta', basis, PairingKind.DUAL, DefiningEquations.NONE)

    def test_grupo_desconhecido(self):
        with pytest.raises(ConfigSchemaError):
            GroupRegistry.get('so5')

    def test_hat_e_vee_sao_inversos(self):
        v = np.array([0.1, -2.0, 3.5])
        np.testing.assert_allclose(vee(hat(v)), v)


class TestColchete:
    """Propriedades do colchete em coordenadas."""

    @settings(max_examples=40, deadline=None)
    @given(group_name, vector3, vector3)
    def test_antissimetria(self, name, xi, eta):
        descriptor = GroupRegistry.get(name)
        np.testing.assert_allclose(
            AlgebraService.bracket(descriptor, xi, eta),
            -AlgebraService.bracket(descriptor, eta, xi),
            atol=1e-12,
        )

    @settings(max_examples=40, deadline=None)
    @given(group_name, vector3, vector3, vector3)
    def test_identidade_de_jacobi(self, name, a, b, c):
        descriptor = GroupRegistry.get(name)
        bracket = lambda u, v: AlgebraService.bracket(descriptor, u, v)  # noqa: E731
        total = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b))
        np.testing.assert_allclose(total, np.zeros(3), atol=1e-10)

    @settings(max_examples=40, deadline=None)
    @given(group_name, vector3, vector3, vector3)
    def test_coad_e_dual_de_ad(self, name, xi, eta, mu):
        descriptor = GroupRegistry.get(name)
        left = AlgebraService.coad(descriptor, xi, mu) @ eta
        right = mu @ AlgebraService.bracket(descriptor, xi, eta)
        assert abs(left - right) < 1e-10

    def test_dimensao_errada(self, so3):
        with pytest.raises(DimensionMismatchError):
            AlgebraService.bracket(so3, np.zeros(2), np.zeros(3))


class TestAcaoAdjunta:
    """Ad, Ad* e a ação coadjunta."""

    @settings(max_examples=30, deadline=None)
    @given(group_name, vector3, vector3, vector3)
    def test_adstar_e_transposta_de_ad(self, name, generator, nu, xi):
        descriptor = GroupRegistry.get(name)
        g = AlgebraService.exp(descriptor, 0.5 * generator)
        left = AlgebraService.Adstar(descriptor, g, nu) @ xi
        right = nu @ AlgebraService.Ad(descriptor, g, xi)
        assert abs(left - right) < 1e-9 * max(1.0, float(np.linalg.norm(g)) ** 2)

    def test_ad_de_so3_e_a_propria_rotacao(self, so3):
        g = AlgebraService.exp(so3, np.array([0.3, -0.2, 1.1]))
        np.testing.assert_allclose(AlgebraService.Ad_matrix(so3, g), g, atol=1e-14)

    def test_ad_e_homomorfismo(self, sl2r):
        g = AlgebraService.exp(sl2r, np.array([0.2, 0.5, -0.3]))
        h = AlgebraService.exp(sl2r, np.array([-0.4, 0.1, 0.7]))
        np.testing.assert_allclose(
            AlgebraService.Ad_matrix(sl2r, g @ h),
            AlgebraService.Ad_matrix(sl2r, g) @ AlgebraService.Ad_matrix(sl2r, h),
            atol=1e-12,
        )

    def test_acao_coadjunta_usa_inverso(self, so3):
        g = AlgebraService.exp(so3, np.array([0.0, 0.0, np.pi / 2]))
        nu = np.array([1.0, 0.0, 0.0])
        # g·ν = Ad*_{g⁻¹}ν = g ν para SO(3)
        np.testing.assert_allclose(AlgebraService.coadjoint_action(so3, g, nu), g @ nu, atol=1e-14)

    def test_elemento_fora_do_grupo(self, so3):
        with pytest.raises(InvalidGroupElementError):
            AlgebraService.Ad_matrix(so3, 2.0 * np.eye(3))


class TestExponencial:
    """exp e pertinência ao grupo."""

    @settings(max_examples=40, deadline=None)
    @given(group_name, vector3)
    def test_exp_pertence_ao_grupo(self, name, xi):
        descriptor = GroupRegistry.get(name)
        g = AlgebraService.exp(descriptor, xi)
        assert membership_residual(descriptor, g) < 1e-10 * max(1.0, float(np.linalg.norm(g)) ** 2)

    @settings(max_examples=40, deadline=None)
    @given(vector3)
    def test_rodrigues_concorda_com_pade(self, xi):
        so3 = GroupRegistry.so3()
        np.testing.assert_allclose(
            AlgebraService.exp(so3, xi, method=ExpMethod.RODRIGUES),
            AlgebraService.exp(so3, xi),
            atol=1e-12,
        )

    def test_rodrigues_em_zero(self):
        np.testing.assert_allclose(AlgebraService.rodrigues(np.zeros(3)), np.eye(3))

    def test_periodo_do_circulo(self, so3, sl2r):
        assert AlgebraService.circle_period(so3, np.array([0.0, 0.0, 2.0])) == pytest.approx(np.pi)
        assert AlgebraService.circle_period(sl2r, np.array([1.0, 0.0, 0.0])) == np.inf


class TestDexp:
    """dexp trivializado à direita."""

    @pytest.mark.parametrize('name', ['so3', 'sl2r'])
    @pytest.mark.parametrize('lam', [
        np.array([0.0, 0.0, 0.0]),
        np.array([1e-4, -2e-4, 5e-5]),
        np.array([0.7, -0.3, 0.4]),
        np.array([1.5, 0.2, -0.9]),
    ])
    def test_dexp_contra_diferencas_finitas(self, name, lam):
        descriptor = GroupRegistry.get(name)
        v = np.array([0.3, -0.5, 0.8])
        step = 1e-6
        derivative = (
            AlgebraService.exp(descriptor, lam + step * v) - AlgebraService.exp(descriptor, lam - step * v)
        ) / (2 * step)
        expected = descriptor.to_matrix(AlgebraService.dexp_right(descriptor, lam, v)) @ AlgebraService.exp(descriptor, lam)
        np.testing.assert_allclose(derivative, expected, atol=1e-7)

    def test_relacao_cubica_em_so3(self, so3):
        lam = np.array([0.3, 0.4, 1.2])
        # ad³ + ‖λ‖² ad = 0
        assert AlgebraService.ad_cubic_coefficient(so3, lam) == pytest.approx(float(lam @ lam))

    @pytest.mark.parametrize('a', [5e-4, -5e-4])
    def test_serie_concorda_com_forma_fechada(self, a):
        s = np.sqrt(abs(a))
        if a > 0:
            closed = ((1 - np.cos(s)) / a, (s - np.sin(s)) / (a * s))
        else:
            closed = ((np.cosh(s) - 1) / -a, (np.sinh(s) - s) / (-a * s))
        np.testing.assert_allclose(AlgebraService.dexp_coefficients(a), closed, atol=1e-11)


class TestDescritorIncompativel:
    """SO(3) e SL(2,R) têm a mesma dimensão: só o descritor distingue os operandos."""

    def test_colchete_com_vetores_de_so3_em_sl2r(self, so3, sl2r):
        xi, eta = so3.vector([1.0, 0.0, 0.0]), so3.vector([0.0, 1.0, 0.0])
        with pytest.raises(DescriptorMismatchError) as exc:
            AlgebraService.bracket(sl2r, xi, eta)
        assert exc.value.expected == 'sl2r' and exc.value.received == 'so3'
        assert exc.value.exit_code == 3

    def test_coad_com_covetor_de_outro_grupo(self, so3, sl2r):
        with pytest.raises(DescriptorMismatchError):
            AlgebraService.coad(so3, so3.vector([0.0, 0.0, 1.0]), sl2r.covector([1.0, 0.0, 0.0]))

    def test_acao_com_elemento_de_outro_grupo(self, so3, sl2r):
        with pytest.raises(DescriptorMismatchError):
            AlgebraService.Adstar(sl2r, so3.element(np.eye(3)), np.array([1.0, 0.0, 0.0]))
        with pytest.raises(DescriptorMismatchError):
            AlgebraService.coadjoint_action(so3, sl2r.element(np.eye(2)), np.zeros(3))

    def test_exp_e_dexp(self, so3, sl2r):
        with pytest.raises(DescriptorMismatchError):
            AlgebraService.exp(so3, sl2r.vector([0.1, 0.2, 0.3]))
        with pytest.raises(DescriptorMismatchError):
            AlgebraService.dexp_right(sl2r, np.zeros(3), so3.vector([0.0, 1.0, 0.0]))

    def test_metodo_do_vetor(self, so3, sl2r):
        with pytest.raises(DescriptorMismatchError):
            so3.vector([1.0, 0.0, 0.0]).bracket(sl2r.vector([0.0, 1.0, 0.0]))

    def test_vetores_tipados_do_mesmo_grupo(self, so3):
        e1, e2 = so3.vector([1.0, 0.0, 0.0]), so3.vector([0.0, 1.0, 0.0])
        np.testing.assert_allclose(AlgebraService.bracket(so3, e1, e2), [0.0, 0.0, 1.0])
        np.testing.assert_allclose(e1.bracket(e2).coords, [0.0, 0.0, 1.0])
        g = so3.element(AlgebraService.exp(so3, np.array([0.0, 0.0, 0.3])))
        np.testing.assert_allclose(
            AlgebraService.Ad(so3, g, e1), AlgebraService.Ad(so3, g.matrix, np.array([1.0, 0.0, 0.0])),
        )


class TestRepresentacoes:
    """Representações de subálgebras e produto diamante."""

    def test_rotacao_em_r3_e_valida(self, so3):
        representation = Representation(np.eye(3), np.array([hat(e) for e in np.eye(3)]))
        validate_representation(so3, representation, 1e-12)
        assert representation.is_orthogonal()

    def test_comutador_inconsistente(self, so3):
        # o deslocamento por 0.5·I preserva comutadores mas não a imagem do colchete
        representation = Representation(np.eye(3), np.array([hat(e) + 0.5 * np.eye(3) for e in np.eye(3)]))
        with pytest.raises(InvalidRepresentationError):
            validate_representation(so3, representation, 1e-12)

    def test_diamante_de_rotacoes(self, so3):
        representation = Representation(np.eye(3), np.array([hat(e) for e in np.eye(3)]))
        a, b = np.array([1.0, 2.0, 0.5]), np.array([-0.3, 0.4, 1.0])
        # ⟨b, e_j × a⟩ = (a × b)_j
        np.testing.assert_allclose(AlgebraService.diamond(representation, a, b, np.eye(3)), np.cross(a, b), atol=1e-14)

    def test_acao_de_grupo_e_exponencial(self, so3):
        representation = Representation(np.eye(3), np.array([hat(e) for e in np.eye(3)]))
        xi = np.array([0.2, -0.1, 0.4])
        np.testing.assert_allclose(
            AlgebraService.group_action(representation, xi), AlgebraService.exp(so3, xi), atol=1e-13,
        )

    def test_acao_fora_da_subalgebra(self):
        # so(2) ⊂ so(3) gerada por e₃ agindo em R² por rotação
        representation = Representation(np.array([[0.0], [0.0], [1.0]]), np.array([[[0.0, -1.0], [1.0, 0.0]]]))
        np.testing.assert_allclose(representation.action(np.array([0.0, 0.0, 2.0])), [[0.0, -2.0], [2.0, 0.0]])
        with pytest.raises(PreconditionError) as exc:
            representation.action(np.array([1.0, 0.0, 0.5]))
        assert exc.value.residual == pytest.approx(1.0)

    def test_acao_trivial_so_aceita_zero(self):
        representation = Representation(np.zeros((3, 0)), np.zeros((0, 2, 2)))
        np.testing.assert_allclose(representation.action(np.zeros(3)), np.zeros((2, 2)))
        with pytest.raises(PreconditionError):
            representation.action(np.array([0.0, 1.0, 0.0]))
