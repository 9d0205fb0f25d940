"""
test_specialfn.py — Testes das funções ℰ, ℱ e do fator de escala m₁.

Cobre:
  - Identidade que define ℰ, ℰ(0) = 1, monotonia e decaimento
  - Âncoras de ℱ e erro de domínio para x > 1
  - solve_m1 contra as fórmulas fechadas (SO(3) e SL(2,R) nilpotente)
"""
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from core.domain import UnsupportedConfigurationError
from gtubes.services import SimpleTubeService
from specialfn.domain import (
    MoserCase,
    ScalarSolveConfig,
    SpecialFunction,
    SpecialFunctionDomainError,
)
from specialfn.services import MoserService, SpecialFunctionService


class TestFuncaoE:
    """ℰ: e^{−xℰ} = 1 − xℰ + x²/2."""

    def test_valor_na_origem(self):
        assert abs(SpecialFunctionService.eval_E(0.0) - 1.0) < 1e-14

    def test_identidade_em_grade(self):
        for x in np.linspace(-10.0, 10.0, 1000):
            value = SpecialFunctionService.eval_E(x)
            assert SpecialFunctionService.e_identity_residual(x, value) < 1e-12, x

    def test_valor_conhecido_em_dois(self):
        # t = 2ℰ(2) resolve e^{−t} + t = 3
        value = SpecialFunctionService.eval_E(2.0)
        assert value == pytest.approx(1.47375, abs=1e-4)
        assert abs(math.exp(-2 * value) + 2 * value - 3.0) < 1e-12

    def test_estritamente_crescente(self):
        grid = np.linspace(-20.0, 20.0, 1000)
        values = [SpecialFunctionService.eval_E(x) for x in grid]
        assert all(b > a for a, b in zip(values, values[1:]))

    def test_positiva_e_decai_para_zero(self):
        assert 0 < SpecialFunctionService.eval_E(-50.0) < 0.15
        assert 0 < SpecialFunctionService.eval_E(-1e6) < 1e-4

    def test_continuidade_na_fronteira_da_serie(self):
        inside = SpecialFunctionService.eval_E(0.99e-5)
        outside = SpecialFunctionService.eval_E(1.01e-5)
        assert abs(outside - inside) < 1e-9

    @settings(max_examples=60, deadline=None)
    @given(st.floats(min_value=-40.0, max_value=40.0, allow_nan=False))
    def test_identidade_propriedade(self, x):
        value = SpecialFunctionService.eval_E(x)
        assert value > 0
        assert SpecialFunctionService.e_identity_residual(x, value) < 1e-11 * max(1.0, x * x)

    def test_configuracao_invalida(self):
        with pytest.raises(ValueError):
            ScalarSolveConfig(abs_tol=0.0)


class TestFuncaoF:
    """ℱ(x) = arcsin(√x)/√x (x > 0), arcsinh(√|x|)/√|x| (x < 0)."""

    def test_limite_na_origem(self):
        assert abs(SpecialFunctionService.eval_F(1e-12) - 1.0) < 1e-10
        assert abs(SpecialFunctionService.eval_F(-1e-12) - 1.0) < 1e-10
        assert SpecialFunctionService.eval_F(0.0) == 1.0

    def test_valor_em_um(self):
        assert abs(SpecialFunctionService.eval_F(1.0) - math.pi / 2) < 1e-14

    def test_valor_em_menos_um(self):
        assert abs(SpecialFunctionService.eval_F(-1.0) - math.log(1 + math.sqrt(2))) < 1e-12

    def test_fora_do_dominio(self):
        with pytest.raises(SpecialFunctionDomainError) as exc:
            SpecialFunctionService.eval_F(1.0001)
        assert exc.value.exit_code == 3

    def test_monotona_e_positiva(self):
        grid = np.linspace(-25.0, 1.0, 2000)
        values = [SpecialFunctionService.eval_F(x) for x in grid]
        assert all(v > 0 for v in values)
        assert all(b > a for a, b in zip(values, values[1:]))

    def test_serie_concorda_com_formula(self):
        for x in (0.99e-3, -0.99e-3):
            root = math.sqrt(abs(x))
            exact = math.asin(root) / root if x > 0 else math.asinh(root) / root
            assert abs(SpecialFunctionService.eval_F(x) - exact) < 1e-13

    def test_evaluate_reporta_residuo(self):
        value = SpecialFunctionService.evaluate(SpecialFunction.F, 0.5)
        assert value.value == pytest.approx(math.pi / (2 * math.sqrt(2)), abs=1e-14)
        assert value.residual < 1e-14
        assert value.to_dict()['function'] == 'F'


class TestFatorDeEscala:
    """solve_m1 contra os casos fechados."""

    @pytest.fixture
    def so3_data(self, so3):
        mu = np.array([0.0, 0.0, 1.0])
        gmu = np.array([[0.0], [0.0], [1.0]])
        q = np.array([[1.0, 0.0], [0.0, 1.0], [0.0, 0.0]])
        return so3, mu, gmu, q

    def test_lambda_nulo(self, so3_data):
        so3, mu, gmu, q = so3_data
        assert MoserService.solve_m1(so3, mu, gmu, q, np.zeros(1), np.zeros(3)) == 1.0

    @pytest.mark.parametrize('nu, lam', [
        (0.0, (0.4, 0.3, 0.0)),
        (0.1, (0.4, 0.3, 0.0)),
        (-0.2, (0.1, -0.5, 0.0)),
        (0.3, (1.2, 0.4, 0.0)),
    ])
    def test_so3_concorda_com_formula_fechada(self, so3_data, nu, lam):
        so3, mu, gmu, q = so3_data
        lam = np.array(lam)
        b = 1.0 + nu
        expected = SpecialFunctionService.eval_F(float(lam @ lam) / (4 * b)) / math.sqrt(b)
        m1 = MoserService.solve_m1(so3, mu, gmu, q, np.array([nu]), lam)
        assert abs(m1 - expected) < 1e-9

    def test_so3_e_caso_cubico(self, so3_data):
        so3, mu, gmu, q = so3_data
        nu_hat = MoserService.embed_nu(gmu, q, np.array([0.1]))
        case = MoserService.detect_case(so3, mu, nu_hat, q, np.array([0.3, 0.2, 0.0]))
        assert case == MoserCase.CUBIC

    @pytest.mark.parametrize('coords', [(0.3, -0.4), (1.5, 0.7), (-2.0, 0.2)])
    def test_sl2_nilpotente_concorda_com_e(self, sl2r, coords):
        tube = SimpleTubeService.sl2_simple_tube(sl2r, np.array([0.0, 1.0, 0.0]))
        lam = tube.q @ np.array(coords)
        nu = np.array([0.05])
        expected = SpecialFunctionService.eval_E(-MoserService.restricted_trace(sl2r, tube.q, lam))
        m1 = MoserService.solve_m1(sl2r, tube.mu, tube.gmu, tube.q, nu, lam)
        assert abs(m1 - expected) < 1e-9

    def test_dimensao_de_q_diferente_de_dois(self, so3):
        q = np.eye(3)[:, :1]
        with pytest.raises(UnsupportedConfigurationError):
            MoserService.solve_m1(so3, np.array([0.0, 0.0, 1.0]), np.eye(3)[:, 1:], q, np.zeros(2), q[:, 0])
