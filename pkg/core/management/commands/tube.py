# core/management/commands/tube.py
"""
Management command para avaliar, inverter, verificar e varrer tubos.

Uso:
    python manage.py tube eval --kind simple --group so3 --mu 0,0,1 --lambda 0.5,0
    python manage.py tube eval --kind so3r3 --model so3r3 --nu 0.1 --a 0.05
    python manage.py tube invert --model so3r3 --phase ponto.json
    python manage.py tube verify --suite so3r3 --seed 0 --points 20 --out report.json
    python manage.py tube sweep --kind simple --group so3 --mu 0,0,1 --check pullback \\
        --param lambda.0=0:1.9:20
    python manage.py tube blcheck --model so3r3 --xi 0,0,0.3 --a 0.1

Saída (stdout): JSON (eval, invert, verify, blcheck) ou CSV (sweep).
Códigos de saída: 2 esquema/configuração, 3 saída de domínio, 4 verificação reprovada.
"""

import logging
from pathlib import Path

import numpy as np
from django.core.management.base import BaseCommand, CommandError

from core.domain import (
    ConfigSchemaError,
    DomainException,
    ModelConfig,
    SweepCheck,
    SweepParameter,
    TargetKind,
    TubeTarget,
    VerificationFailedError,
)
from core.services import SweepService, TubeTargetService
from core.utils.json_utils import dumps, load_document, parse_cli_vector
from core.utils.policy import policy
from hamtube.domain import PhasePoint
from hamtube.services import BatesLermanService, ModelBuilder, TubeInversionService
from lie.services import AlgebraService
from verification.domain import SuiteName
from verification.services import VerificationSuiteService
from verification.services.suite_service import DEFAULT_POINTS

logger = logging.getLogger(__name__)

_COMPONENTS = ('nu', 'lambda', 'eps', 'a', 'b')


class Command(BaseCommand):
    help = "Avalia, inverte, verifica e varre tubos hamiltonianos."

    def add_arguments(self, parser):
        subparsers = parser.add_subparsers(dest="action", required=True)

        evaluate = subparsers.add_parser("eval", help="Avalia um tubo num ponto")
        self._add_target_arguments(evaluate)
        self._add_point_arguments(evaluate)

        invert = subparsers.add_parser("invert", help="Inverte o tubo geral de um modelo")
        invert.add_argument("--model", required=True, help="Nome de modelo distribuído ou arquivo JSON")
        invert.add_argument("--phase", required=True, help="Arquivo JSON com g, nu, a, b ou Q, P")

        verify = subparsers.add_parser("verify", help="Executa uma suíte de verificação")
        verify.add_argument("--suite", required=True, help=f"Suíte: {', '.join(s.value for s in SuiteName)}")
        verify.add_argument("--seed", type=int, default=None, help="Semente (padrão: seed do modelo ou HAMTUBE_SEED)")
        verify.add_argument("--points", type=int, default=DEFAULT_POINTS, help=f"Pontos por tubo (padrão: {DEFAULT_POINTS})")
        verify.add_argument("--model", default=None, help="Modelo que substitui os de referência")
        verify.add_argument("--out", default=None, help="Arquivo do relatório (padrão: stdout)")

        sweep = subparsers.add_parser("sweep", help="Varre um resíduo sobre uma grade de parâmetros")
        self._add_target_arguments(sweep)
        sweep.add_argument(
            "--check",
            default=SweepCheck.PULLBACK.value,
            choices=[item.value for item in SweepCheck],
            help="Resíduo avaliado em cada célula",
        )
        sweep.add_argument(
            "--param",
            action="append",
            required=True,
            help="nome[.i]=início:fim:quantidade (repetível)",
        )
        sweep.add_argument("--out", default=None, help="Arquivo CSV (padrão: stdout)")

        blcheck = subparsers.add_parser("blcheck", help="Predicado de Bates-Lerman num ponto do modelo")
        blcheck.add_argument("--model", required=True, help="Nome de modelo distribuído ou arquivo JSON")
        self._add_point_arguments(blcheck)
        blcheck.add_argument("--sample", type=int, default=0, help="Pontos amostrados de J⁻¹(μ) (modelo so3r3)")
        blcheck.add_argument("--seed", type=int, default=None, help="Semente da amostragem")

    @staticmethod
    def _add_target_arguments(parser):
        parser.add_argument("--kind", required=True, choices=[item.value for item in TargetKind], help="Tipo de tubo")
        parser.add_argument("--group", default=None, help="so3, sl2r ou arquivo JSON (simple/restricted)")
        parser.add_argument("--mu", default=None, help="Coordenadas de μ, ex.: 0,0,1")
        parser.add_argument("--xi-h", dest="xi_h", default=None, help="Gerador de h (restricted)")
        parser.add_argument("--model", default=None, help="Modelo cotangente (tube0/general/so3r3)")

    @staticmethod
    def _add_point_arguments(parser):
        parser.add_argument("--xi", default=None, help="g = exp(ξ); padrão identidade")
        for name in _COMPONENTS:
            parser.add_argument(f"--{name}", dest=f"component_{name}", default=None, help=f"Componente {name}")

    def handle(self, *args, **options):
        handlers = {
            "eval": self._eval,
            "invert": self._invert,
            "verify": self._verify,
            "sweep": self._sweep,
            "blcheck": self._blcheck,
        }
        try:
            output = handlers[options["action"]](options)
        except DomainException as exc:
            logger.warning("tube %s falhou (%s): %s", options["action"], exc.code, exc.message)
            raise CommandError(exc.message, returncode=exc.exit_code)

        if output is not None:
            self.stdout.write(output)

    # ------------------------------------------------------------------
    # Argumentos
    # ------------------------------------------------------------------

    @staticmethod
    def _vector(options, key):
        value = options.get(key)
        return None if value is None else parse_cli_vector(value, f"--{key.replace('_', '-')}")

    def _target(self, options):
        return TubeTargetService.build(
            options["kind"],
            group=options.get("group"),
            mu=self._vector(options, "mu"),
            xi_h=self._vector(options, "xi_h"),
            model=options.get("model"),
        )

    def _point(self, options, descriptor):
        xi = self._vector(options, "xi")
        g = AlgebraService.exp(descriptor, xi if xi is not None else np.zeros(descriptor.dimension))
        values = {
            name: parse_cli_vector(options[f"component_{name}"], f"--{name}")
            for name in _COMPONENTS if options.get(f"component_{name}") is not None
        }
        return g, values

    @staticmethod
    def _write(data: str, out):
        if out is None:
            return data
        Path(out).write_text(data + "\n", encoding="utf-8")
        return None

    # ------------------------------------------------------------------
    # Subcomandos
    # ------------------------------------------------------------------

    def _eval(self, options):
        target = self._target(options)
        g, values = self._point(options, target.descriptor)
        return dumps(TubeTargetService.evaluate(target, g, values))

    def _invert(self, options):
        model = ModelBuilder.from_config(ModelConfig.from_source(options["model"]))
        phase = PhasePoint.from_dict(load_document(options["phase"]))
        point = TubeInversionService.tube_invert(model, phase)
        roundtrip = TubeInversionService.forward(model, point).distance(phase)
        return dumps({'model': model.name, 'point': point, 'roundtrip': roundtrip})

    def _verify(self, options):
        model, seed = None, options["seed"]
        if options["model"]:
            config = ModelConfig.from_source(options["model"])
            model = ModelBuilder.from_config(config)
            if seed is None:
                seed = config.seed
        if options["points"] < 1:
            raise ConfigSchemaError("--points", "esperado inteiro ≥ 1")

        report = VerificationSuiteService.run(options["suite"], seed=seed, points=options["points"], model=model)
        output = self._write(dumps(report), options["out"])
        if not report.passed:
            # O relatório é emitido antes do código de saída 4
            if output is not None:
                self.stdout.write(output)
            raise VerificationFailedError(len(report.failed), len(report.records))
        return output

    def _sweep(self, options):
        target = self._target(options)
        parameters = [SweepParameter.parse(text) for text in options["param"]]
        rows = SweepService.run(target, options["check"], parameters)
        return self._write(SweepService.to_csv(rows, parameters).rstrip("\n"), options["out"])

    def _blcheck(self, options):
        config = ModelConfig.from_source(options["model"])
        model = ModelBuilder.from_config(config)
        target = TubeTarget(TargetKind.GENERAL, model)
        g, values = self._point(options, model.descriptor)
        point = TubeTargetService.model_point(target, g, values)
        result = BatesLermanService.bates_lerman_predicate(model, point)
        document = {'model': model.name, 'point': point, 'result': result}

        if options["sample"]:
            seed = options["seed"] if options["seed"] is not None else (config.seed or policy('DEFAULT_SEED'))
            rng = np.random.default_rng(seed)
            samples = []
            for phase in BatesLermanService.sample_level_set(model, options["sample"], rng):
                preimage, sampled, roundtrip = BatesLermanService.level_set_consistency(model, phase)
                samples.append({'phase': phase, 'point': preimage, 'result': sampled, 'roundtrip': roundtrip})
            document['samples'] = samples
        return dumps(document)
