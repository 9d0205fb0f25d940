# splitting/management/commands/splitting.py
"""
Management command para construir e certificar splittings adaptados.

Uso:
    python manage.py splitting compute --group so3 --mu 0,0,1 --h 1,0,0
    python manage.py splitting compute --group sl2r --mu 1,0,0
    python manage.py splitting compute --model so3_circle

Saída (stdout): JSON com as bases, a matriz de σ, os resíduos de
certificação e, para modelos, os dados da fatia.
"""

import logging

import numpy as np
from django.core.management.base import BaseCommand, CommandError

from core.domain import ConfigSchemaError, DomainException, ModelConfig
from core.utils.json_utils import dumps, parse_cli_vector
from hamtube.services import ModelBuilder
from lie.services import GroupRegistry
from splitting.services import SplittingSerializer, SplittingService

logger = logging.getLogger(__name__)


class Command(BaseCommand):
    help = "Constrói o splitting adaptado g = g_μ ⊕ o ⊕ l ⊕ n e imprime o resultado certificado."

    def add_arguments(self, parser):
        subparsers = parser.add_subparsers(dest="action", required=True)
        compute = subparsers.add_parser("compute", help="Calcula e certifica um splitting")
        compute.add_argument("--group", default=None, help="so3, sl2r ou arquivo JSON")
        compute.add_argument("--mu", default=None, help="Coordenadas de μ, ex.: 0,0,1")
        compute.add_argument(
            "--h",
            action="append",
            default=[],
            help="Gerador de h em coordenadas de g (repetível; ausente: h = 0)",
        )
        compute.add_argument("--model", default=None, help="Modelo cotangente (inclui a fatia)")

    def handle(self, *args, **options):
        try:
            document = self._compute(options)
        except DomainException as exc:
            logger.warning("splitting compute falhou (%s): %s", exc.code, exc.message)
            raise CommandError(exc.message, returncode=exc.exit_code)
        self.stdout.write(dumps(document))

    @staticmethod
    def _compute(options) -> dict:
        if options["model"]:
            model = ModelBuilder.from_config(ModelConfig.from_source(options["model"]))
            return SplittingSerializer.to_dict(model.splitting, model.restricted.sigma, model.slice_data)

        if not options["group"] or options["mu"] is None:
            raise ConfigSchemaError("--group/--mu", "obrigatórios sem --model")
        descriptor = GroupRegistry.get(options["group"])
        mu = parse_cli_vector(options["mu"], "--mu")
        generators = [parse_cli_vector(text, "--h") for text in options["h"]]
        h = np.column_stack(generators) if generators else np.zeros((descriptor.dimension, 0))

        splitting = SplittingService.adapted_splitting(descriptor, h, mu)
        return SplittingSerializer.to_dict(splitting, SplittingService.sigma(splitting))
