"""
test_splitting.py — Testes do splitting adaptado, de σ e da fatia simplética.

Cobre:
  - Álgebra de isotropia g_μ
  - Splitting de SO(3) com h = span ξ_h ⊥ μ (bases conhecidas)
  - Configurações de SL(2,R) (h trivial e h compacto)
  - σ: n → l* e sua invertibilidade
  - Fatia: B, C, g_z, s e o momento quadrático J_N
  - Serialização com re-certificação
"""
import numpy as np
import pytest

from core.domain import ConfigSchemaError, PreconditionError
from core.utils.linalg_utils import subspace_angle
from lie.domain import Representation
from splitting.domain import CertificationError
from splitting.services import SliceService, SplittingSerializer, SplittingService

E1, E2, E3 = np.eye(3)


def _span(*vectors):
    return np.column_stack(vectors)


def _assert_certified(splitting):
    residuals = SplittingService.certify(splitting)
    assert all(value < 1e-9 for value in residuals.values()), residuals


class TestIsotropia:
    """g_μ = ker(ξ ↦ ad*_ξ μ)."""

    def test_mu_nulo_da_algebra_inteira(self, so3):
        assert SplittingService.isotropy_algebra(so3, np.zeros(3)).shape == (3, 3)

    def test_so3_gerada_por_mu(self, so3):
        gmu = SplittingService.isotropy_algebra(so3, np.array([0.0, 0.0, 2.0]))
        assert subspace_angle(gmu, _span(E3)) < 1e-12
        # orientação: ⟨μ, v⟩ > 0
        assert gmu[2, 0] > 0

    def test_sl2_nilpotente(self, sl2r):
        # μ = (0, 1, 0) pareia com X; g_μ = span Y
        gmu = SplittingService.isotropy_algebra(sl2r, np.array([0.0, 1.0, 0.0]))
        assert subspace_angle(gmu, _span(E3)) < 1e-12


class TestSplittingSO3:
    """SO(3), μ = (0,0,1), h = span{(1,0,0)}."""

    @pytest.fixture
    def splitting(self, so3):
        return SplittingService.adapted_splitting(so3, _span(E1), E3, metric=np.eye(3))

    def test_bases_conhecidas(self, splitting):
        assert subspace_angle(splitting.l, _span(E1)) < 1e-10
        assert subspace_angle(splitting.n, _span(E2)) < 1e-10
        assert subspace_angle(splitting.p, _span(E3)) < 1e-10
        assert splitting.o.shape == (3, 0)
        assert splitting.hmu.shape == (3, 0)

    def test_invariantes_certificadas(self, splitting):
        _assert_certified(splitting)
        assert splitting.dimensions == {'g': 3, 'h': 1, 'g_mu': 1, 'h_mu': 0, 'o': 0, 'l': 1, 'n': 1, 'p': 1}

    def test_sigma_escalar(self, splitting):
        sigma = SplittingService.sigma(splitting)
        # ⟨μ, n × l⟩ com l = ±e₁, n = ±e₂
        assert sigma.matrix.shape == (1, 1)
        assert abs(abs(sigma.matrix[0, 0]) - 1.0) < 1e-12
        assert sigma.condition_number == pytest.approx(1.0)

    def test_sigma_linear(self, splitting):
        sigma = SplittingService.sigma(splitting)
        np.testing.assert_allclose(sigma(np.zeros(1)), np.zeros(1))
        np.testing.assert_allclose(sigma(sigma.solve(np.array([0.3]))), [0.3], atol=1e-14)

    def test_h_igual_a_isotropia(self, so3):
        splitting = SplittingService.adapted_splitting(so3, _span(E3), E3)
        assert splitting.dimensions['o'] == 2
        assert splitting.dimensions['h_mu'] == 1
        assert splitting.l.shape[1] == 0 and splitting.n.shape[1] == 0
        assert SplittingService.sigma(splitting).dimension == 0
        _assert_certified(splitting)

    def test_h_nao_subalgebra(self, so3):
        with pytest.raises(PreconditionError):
            SplittingService.adapted_splitting(so3, _span(E1, E2), E3)

    def test_deterministico(self, so3):
        first = SplittingService.adapted_splitting(so3, _span(E1), E3)
        second = SplittingService.adapted_splitting(so3, _span(E1), E3)
        for key in ('gmu', 'o', 'l', 'n', 'p'):
            np.testing.assert_array_equal(getattr(first, key), getattr(second, key))


class TestSplittingSL2:
    """SL(2,R): h trivial e h = span(X − Y) compacto."""

    @pytest.mark.parametrize('mu', [
        np.array([1.0, 0.0, 0.0]),
        np.array([0.3, 1.0, -0.4]),
        np.array([0.0, 1.0, 0.0]),
    ])
    def test_h_trivial(self, sl2r, mu):
        splitting = SplittingService.adapted_splitting(sl2r, np.zeros((3, 0)), mu)
        assert splitting.dimensions['o'] == 2
        assert splitting.l.shape[1] == 0 and splitting.n.shape[1] == 0
        _assert_certified(splitting)

    @pytest.mark.parametrize('seed', [1, 2])
    def test_h_compacto_aleatorio(self, sl2r, seed):
        rng = np.random.default_rng(seed)
        a, c = rng.uniform(0.3, 1.5, size=2) * rng.choice([-1.0, 1.0], size=2)
        # μ|_h = 0 para h = span(X − Y)
        mu = np.array([a, c, c])
        splitting = SplittingService.adapted_splitting(sl2r, _span(np.array([0.0, 1.0, -1.0])), mu)
        _assert_certified(splitting)
        assert splitting.dimensions['l'] == 1
        sigma = SplittingService.sigma(splitting)
        singular = np.linalg.svd(sigma.matrix, compute_uv=False)
        assert singular[-1] > 1e-8 * singular[0]

    def test_metrica_media_e_invariante(self, sl2r):
        h = _span(np.array([0.0, 1.0, -1.0]))
        metric = SplittingService.invariant_metric(sl2r, h)
        assert SplittingService.metric_invariance_residual(sl2r, metric, h) < 1e-10


class TestFatia:
    """Dados da fatia simplética e J_N."""

    def test_fatia_do_modelo_isotropico(self, isotropic_model):
        data = isotropic_model.slice_data
        assert data.B.shape[1] == 1 and data.C.shape[1] == 2
        assert subspace_angle(data.gz, _span(E3)) < 1e-10
        assert subspace_angle(data.s, _span(E1, E2)) < 1e-10
        assert all(value < 1e-9 for value in data.residuals.values())

    def test_fatia_sem_isotropia(self, circle_model):
        data = circle_model.slice_data
        # h_μ = 0: B = S, g_z = s = 0
        assert data.B.shape == (2, 2)
        assert data.gz.shape[1] == 0 and data.s.shape[1] == 0
        momentum = SliceService.slice_momentum(
            circle_model.splitting, data, np.zeros(3), np.array([0.1, 0.2]), np.array([0.3, -0.1]),
        )
        assert momentum.shape == (0,)

    def test_momento_quadratico_explicito(self, so3):
        splitting = SplittingService.adapted_splitting(so3, _span(E3), E3)
        representation = Representation(_span(E3), np.array([[[0.0, -1.0], [1.0, 0.0]]]))
        lam = np.array([0.3, -0.2, 0.0])
        a, b = np.array([0.5, 0.1]), np.array([-0.2, 0.4])
        value = SliceService.quadratic_momentum(splitting, representation, lam, a, b, splitting.hmu)
        # ½‖λ‖² + ⟨b, J a⟩ com J a rotação de 90°
        expected = 0.5 * float(lam @ lam) + float(b @ np.array([-a[1], a[0]]))
        assert value.shape == (1,)
        assert abs(value[0] - expected) < 1e-14

    def test_momento_quadratico_homogeneo(self, so3):
        splitting = SplittingService.adapted_splitting(so3, _span(E3), E3)
        representation = Representation(_span(E3), np.array([[[0.0, -1.0], [1.0, 0.0]]]))
        lam, a, b = np.array([0.3, -0.2, 0.0]), np.array([0.5, 0.1]), np.array([-0.2, 0.4])
        base = SliceService.quadratic_momentum(splitting, representation, lam, a, b, splitting.hmu)
        scaled = SliceService.quadratic_momentum(splitting, representation, 2 * lam, 2 * a, 2 * b, splitting.hmu)
        np.testing.assert_allclose(scaled, 4 * base, atol=1e-14)
        zero = SliceService.quadratic_momentum(splitting, representation, np.zeros(3), np.zeros(2), b, splitting.hmu)
        np.testing.assert_allclose(zero, 0.0)

    def test_forma_da_fatia_antissimetrica(self, isotropic_model):
        form = SliceService.slice_form(isotropic_model.splitting, isotropic_model.slice_data)
        np.testing.assert_allclose(form, -form.T)
        assert abs(np.linalg.det(form)) > 0


class TestSerializacao:
    """Splittings em JSON, relidos com re-certificação."""

    def test_ida_e_volta_recertifica(self, so3):
        splitting = SplittingService.adapted_splitting(so3, _span(E1), E3)
        document = SplittingSerializer.to_dict(splitting, SplittingService.sigma(splitting))
        loaded = SplittingSerializer.from_dict(document)
        for key in ('gmu', 'l', 'n', 'p'):
            assert subspace_angle(getattr(loaded, key), getattr(splitting, key)) < 1e-12
        assert document['sigma']['matrix'] and document['dimensions']['l'] == 1

    def test_base_editada_falha_na_certificacao(self, so3):
        splitting = SplittingService.adapted_splitting(so3, _span(E1), E3)
        document = SplittingSerializer.to_dict(splitting)
        # n dentro de g_μ quebra a soma direta
        document['bases']['n'] = [[0.0, 0.0, 1.0]]
        with pytest.raises(CertificationError):
            SplittingSerializer.from_dict(document)

    def test_base_ausente(self, so3):
        splitting = SplittingService.adapted_splitting(so3, _span(E1), E3)
        document = SplittingSerializer.to_dict(splitting)
        del document['bases']['l']
        with pytest.raises(ConfigSchemaError):
            SplittingSerializer.from_dict(document)
