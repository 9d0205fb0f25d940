"""
test_verification.py — Testes do motor de diferenças finitas e das suítes.

Cobre:
  - FDConfig e relatórios (merge, resumo, registros pulados)
  - Pullback simplético do tubo simples de SO(3) e o controle negativo
  - Suítes nomeadas com poucos pontos (as completas ficam em `slow`)
"""
import json

import numpy as np
import pytest

from verification.domain import (
    CheckKind,
    CheckRecord,
    FDConfig,
    InvalidFDConfigError,
    UnknownSuiteError,
    VerificationReport,
)
from verification.services import (
    FiniteDifferenceService,
    TubeChartService,
    VerificationSuiteService,
    map_points,
    random_group_element,
    sample_ball,
)


def _record(point_id, check, residual, passed, skipped=False):
    return CheckRecord(point_id, check, residual, passed, skipped=skipped)


class TestConfiguracaoFD:
    """Passo e limiares."""

    @pytest.mark.parametrize('kwargs', [
        {'step': 0.0},
        {'step': -1e-5},
        {'scheme': 'forward'},
        {'thresholds': {'pullback': 0.0}},
    ])
    def test_configuracao_invalida(self, kwargs):
        with pytest.raises(InvalidFDConfigError) as exc:
            FDConfig(**kwargs)
        assert exc.value.exit_code == 2

    def test_limiares_das_settings(self):
        config = FDConfig.from_settings()
        assert config.threshold(CheckKind.PULLBACK) == pytest.approx(1e-6)
        assert config.threshold('negative_control') == pytest.approx(1e-3)


class TestRelatorio:
    """VerificationReport é derivado dos registros."""

    def test_resumo_ignora_pulados(self):
        report = VerificationReport.of([
            _record('p:000', 'pullback', 1e-8, True),
            _record('p:001', 'pullback', 3e-6, False),
            _record('p:002', 'pullback', float('nan'), False, skipped=True),
        ])
        summary = report.summary['pullback']
        assert summary == {'max_residual': 3e-6, 'passed': 1, 'failed': 1, 'skipped': 1}
        assert not report.passed
        assert [r.point_id for r in report.failed] == ['p:001']

    def test_merge_associativo(self):
        a = VerificationReport.of([_record('x:001', 'momentum', 1e-12, True)])
        b = VerificationReport.of([_record('x:000', 'momentum', 2e-12, True)])
        c = VerificationReport.of([_record('x:000', 'center', 0.0, True)])
        assert a.merge(b).merge(c) == a.merge(b.merge(c))
        assert [r.check for r in a.merge(b).merge(c).records] == ['center', 'momentum', 'momentum']

    def test_relatorio_vazio_passa(self):
        assert VerificationReport().passed
        assert VerificationReport().to_dict() == {'passed': True, 'summary': {}, 'records': []}


class TestDiferencasFinitas:
    """Pullback da forma canônica pelo tubo simples de SO(3)."""

    @pytest.fixture
    def points(self, so3, rng):
        return [
            (f"so3:{i:03d}", random_group_element(so3, rng), np.concatenate([[0.05 * i], sample_ball(rng, 2, 0.2)]))
            for i in range(2)
        ]

    def test_pullback_preservado(self, so3_tube, points):
        f, layout, target = TubeChartService.simple_chart(so3_tube)
        report = FiniteDifferenceService.fd_pullback_check(f, layout, target, points, label='so3')
        assert report.passed, report.summary
        assert set(report.summary) == {'so3.pullback'}

    def test_controle_negativo_reprovado(self, so3_tube, points):
        f, layout, target = TubeChartService.simple_chart(so3_tube)
        report = FiniteDifferenceService.fd_pullback_check(
            TubeChartService.scaled_output(f, 1.01), layout, target, points, kind=CheckKind.NEGATIVE_CONTROL,
        )
        # passed = o mapa perturbado foi detectado
        assert report.passed
        assert all(r.residual > 1e-3 for r in report.records)

    def test_saida_de_dominio_vira_registro_pulado(self, so3_tube):
        f, layout, target = TubeChartService.simple_chart(so3_tube)
        # ν = −2 torna b ≤ 0
        points = [('fora:000', np.eye(3), np.array([-2.0, 0.1, 0.0]))]
        report = FiniteDifferenceService.fd_pullback_check(f, layout, target, points)
        assert report.records[0].skipped
        assert report.passed

    def test_map_points_preserva_ordem(self):
        assert map_points(lambda x: x * x, list(range(10)), threads=3) == [x * x for x in range(10)]

    def test_amostra_na_bola(self, rng):
        for _ in range(20):
            assert np.linalg.norm(sample_ball(rng, 3, 0.4)) <= 0.4
        assert sample_ball(rng, 0, 1.0).shape == (0,)


class TestSuites:
    """Suítes nomeadas."""

    def test_suite_desconhecida(self):
        with pytest.raises(UnknownSuiteError) as exc:
            VerificationSuiteService.run('toro')
        assert exc.value.exit_code == 2

    def test_disponiveis(self):
        assert VerificationSuiteService.available() == ['simple', 'restricted', 'tube0', 'general', 'so3r3']

    def test_simple(self):
        report = VerificationSuiteService.run('simple', seed=0, points=2)
        assert report.passed, report.summary
        assert any(check.endswith('negative_control') for check in report.summary)

    def test_restricted(self):
        report = VerificationSuiteService.run('restricted', seed=0, points=2)
        assert report.passed, report.summary

    def test_reprodutivel_pela_semente(self):
        first = VerificationSuiteService.run('simple', seed=7, points=1)
        second = VerificationSuiteService.run('simple', seed=7, points=1)
        assert json.dumps(first.to_dict(), sort_keys=True) == json.dumps(second.to_dict(), sort_keys=True)

    @pytest.mark.slow
    @pytest.mark.parametrize('suite', ['tube0', 'general', 'so3r3'])
    def test_suites_de_modelos(self, suite):
        report = VerificationSuiteService.run(suite, seed=0, points=2)
        assert report.passed, report.summary

    @pytest.mark.slow
    @pytest.mark.parametrize('suite', ['simple', 'restricted', 'tube0', 'general', 'so3r3'])
    def test_suites_completas(self, suite):
        report = VerificationSuiteService.run(suite, seed=0)
        assert report.passed, report.summary
