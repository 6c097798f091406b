import json
import logging
import sys
from collections.abc import Sequence

from src.config.settings import settings
from src.domain.shared.exceptions import global_exception_handler
from src.features.cli.infrastructure.commands import run

# Los informes van a stdout; el registro siempre a stderr
logging.basicConfig(
    level=settings.LOG_LEVEL,
    format=settings.LOG_FORMAT,
    datefmt=settings.LOG_DATEFORMAT,
    stream=sys.stderr,
)
logger = logging.getLogger(__name__)


def main(argv: Sequence[str] | None = None) -> int:
    """Punto de entrada de la linea de comandos; devuelve el codigo de salida."""
    try:
        return run(argv)
    except Exception as exc:
        exit_code, body = global_exception_handler(exc)
        sys.stderr.write(json.dumps(body, ensure_ascii=False) + "\n")
        return exit_code


if __name__ == "__main__":
    sys.exit(main())
