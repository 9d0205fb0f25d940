# specialfn/management/commands/specialfn.py
"""
Management command para avaliar as funções especiais ℰ e ℱ.

Uso:
    python manage.py specialfn eval E 0
    python manage.py specialfn eval F -1

Saída (stdout): JSON com função, argumento, valor e resíduo da identidade.
"""

import logging

from django.core.management.base import BaseCommand, CommandError

from core.domain.exceptions import DomainException
from core.utils.json_utils import dumps
from specialfn.domain import SpecialFunction
from specialfn.services import SpecialFunctionService

logger = logging.getLogger(__name__)


class Command(BaseCommand):
    help = "Avalia ℰ ou ℱ e imprime valor e resíduo da identidade de definição."

    def add_arguments(self, parser):
        subparsers = parser.add_subparsers(dest="action", required=True)
        evaluate = subparsers.add_parser("eval", help="Avalia uma função especial")
        evaluate.add_argument(
            "function",
            choices=[item.value for item in SpecialFunction],
            help="Função: E (ℰ) ou F (ℱ)",
        )
        evaluate.add_argument("x", type=float, help="Argumento real")

    def handle(self, *args, **options):
        function = SpecialFunction(options["function"])
        try:
            result = SpecialFunctionService.evaluate(function, options["x"])
        except DomainException as exc:
            logger.warning("specialfn eval falhou: %s", exc.message)
            raise CommandError(exc.message, returncode=exc.exit_code)

        self.stdout.write(dumps(result))
