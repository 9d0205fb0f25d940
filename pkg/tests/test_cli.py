"""
test_cli.py — Testes de integração dos management commands.

Cobre:
  - specialfn eval, splitting compute
  - tube eval / invert / verify / sweep / blcheck
  - Códigos de saída: 2 configuração, 3 domínio, 4 verificação reprovada
  - Esquema publicado em docs/CONFIG_SCHEMA.md
"""
import json
from io import StringIO

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError

from verification.domain import CheckRecord, VerificationReport

pytestmark = pytest.mark.integration


def _run(*args):
    out = StringIO()
    call_command(*args, stdout=out)
    return out.getvalue()


def _run_json(*args):
    return json.loads(_run(*args))


class TestSpecialfn:

    def test_e_em_zero(self):
        result = _run_json('specialfn', 'eval', 'E', '0')
        assert result['function'] == 'E'
        assert result['value'] == pytest.approx(1.0, abs=1e-14)

    def test_f_em_menos_um(self):
        result = _run_json('specialfn', 'eval', 'F', '-1')
        assert result['residual'] < 1e-12


class TestSplittingCompute:

    def test_so3(self):
        result = _run_json('splitting', 'compute', '--group', 'so3', '--mu', '0,0,1', '--h', '1,0,0')
        assert result['dimensions']['l'] == 1
        assert result['dimensions']['n'] == 1
        assert len(result['sigma']['matrix']) == 1

    def test_modelo_inclui_fatia(self):
        result = _run_json('splitting', 'compute', '--model', 'so3_isotropic')
        assert 'slice' in result

    def test_sem_mu(self):
        with pytest.raises(CommandError) as exc:
            _run('splitting', 'compute', '--group', 'so3')
        assert exc.value.returncode == 2


class TestTubeEval:

    def test_centro_do_tubo_simples(self):
        result = _run_json('tube', 'eval', '--kind', 'simple', '--group', 'so3', '--mu', '0,0,1')
        assert result['kind'] == 'simple'
        assert result['output']['nu'] == pytest.approx([0.0, 0.0, 1.0], abs=1e-14)

    def test_so3r3_residuos(self):
        result = _run_json('tube', 'eval', '--kind', 'so3r3', '--model', 'so3r3', '--nu', '0.1', '--a', '0.05')
        assert result['residuals']['momentum'] < 1e-10
        assert set(result['output']) >= {'Q', 'P'}

    def test_saida_de_dominio(self):
        with pytest.raises(CommandError) as exc:
            _run('tube', 'eval', '--kind', 'simple', '--group', 'so3', '--mu', '0,0,1', '--nu', '-2', '--lambda', '0.1,0')
        assert exc.value.returncode == 3

    def test_componente_desconhecido(self):
        with pytest.raises(CommandError) as exc:
            _run('tube', 'eval', '--kind', 'simple', '--group', 'so3', '--mu', '0,0,1', '--a', '0.1')
        assert exc.value.returncode == 2


class TestTubeInvert:

    def test_ida_e_volta(self, tmp_path):
        forward = _run_json('tube', 'eval', '--kind', 'so3r3', '--model', 'so3r3', '--nu', '0.1', '--a', '0.05')
        phase = tmp_path / 'ponto.json'
        phase.write_text(json.dumps(forward['output']), encoding='utf-8')

        result = _run_json('tube', 'invert', '--model', 'so3r3', '--phase', str(phase))
        assert result['model'] == 'so3r3'
        assert result['roundtrip'] < 1e-8

    def test_modelo_malformado(self, tmp_path):
        broken = tmp_path / 'modelo.json'
        broken.write_text('{"kind": ', encoding='utf-8')
        with pytest.raises(CommandError) as exc:
            _run('tube', 'invert', '--model', str(broken), '--phase', str(broken))
        assert exc.value.returncode == 2


class TestTubeVerify:

    def test_simple_aprovado(self, tmp_path):
        out = tmp_path / 'relatorio.json'
        assert _run('tube', 'verify', '--suite', 'simple', '--points', '1', '--seed', '0', '--out', str(out)) == ''
        report = json.loads(out.read_text(encoding='utf-8'))
        assert report['passed']

    def test_suite_desconhecida(self):
        with pytest.raises(CommandError) as exc:
            _run('tube', 'verify', '--suite', 'toro')
        assert exc.value.returncode == 2

    def test_reprovado_emite_relatorio(self, monkeypatch):
        failing = VerificationReport.of([CheckRecord('x:000', 'pullback', 1.0, False)])
        monkeypatch.setattr(
            'core.management.commands.tube.VerificationSuiteService.run',
            lambda *args, **kwargs: failing,
        )
        out = StringIO()
        with pytest.raises(CommandError) as exc:
            call_command('tube', 'verify', '--suite', 'simple', stdout=out)
        assert exc.value.returncode == 4
        assert json.loads(out.getvalue())['passed'] is False


class TestTubeSweep:

    def test_csv(self):
        text = _run(
            'tube', 'sweep', '--kind', 'simple', '--group', 'so3', '--mu', '0,0,1',
            '--check', 'pullback', '--param', 'lambda.0=0:0.5:3',
        )
        lines = text.strip().splitlines()
        assert lines[0].startswith('index,')
        assert len(lines) == 4

    def test_parametro_malformado(self):
        with pytest.raises(CommandError) as exc:
            _run('tube', 'sweep', '--kind', 'simple', '--group', 'so3', '--mu', '0,0,1', '--param', 'lambda')
        assert exc.value.returncode == 2


class TestTubeBlcheck:

    def test_identidade_no_conjunto_de_nivel(self):
        result = _run_json('tube', 'blcheck', '--model', 'so3r3')
        assert result['result']['holds']

    def test_amostragem(self):
        result = _run_json('tube', 'blcheck', '--model', 'so3r3', '--sample', '2', '--seed', '3')
        assert len(result['samples']) == 2
        assert all(sample['result']['holds'] for sample in result['samples'])
        assert all(sample['roundtrip'] < 1e-8 for sample in result['samples'])


class TestEsquemaPublicado:

    @pytest.fixture
    def schema(self, settings):
        return (settings.BASE_DIR / 'docs' / 'CONFIG_SCHEMA.md').read_text(encoding='utf-8')

    def test_chaves_do_modelo_documentadas(self, schema):
        from core.domain.model_config import RADIUS_KEYS, TOLERANCE_KEYS

        for key in RADIUS_KEYS + TOLERANCE_KEYS + ('factor', 'representation', 'alpha', 'seed'):
            assert f'`{key}`' in schema

    def test_descritor_de_grupo_documentado(self, schema):
        for key in ('name', 'basis', 'pairing', 'defining_equations', 'membership_tol'):
            assert f'`{key}`' in schema

    def test_alvos_e_verificacoes_documentados(self, schema):
        from core.domain import SweepCheck, TargetKind

        for item in list(TargetKind) + list(SweepCheck):
            assert f'`{item.value}`' in schema
        assert '--param nome[.i]=início:fim:quantidade' in schema
