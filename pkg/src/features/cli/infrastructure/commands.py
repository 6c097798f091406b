import argparse
import logging
from collections.abc import Callable, Sequence
from typing import Any, NoReturn

from src.domain.shared.custom_types import AlgebraKind, Mode, OutputFormat, Ring, VerifySuite
from src.features.cli.application.dtos import SUBCOMMANDS, ReportDocument, RunConfig
from src.features.cli.application.use_cases import (
    DimensionesUseCase,
    EjecutarH1UseCase,
    PerfilGeneracionCLIUseCase,
    ReducirAranaCLIUseCase,
    VerificarUseCase,
)
from src.features.cli.domain.exceptions import LineaDeComandosException, SuiteFallidaException
from src.features.cli.infrastructure.writers import write_report
from src.features.homology.infrastructure.repositories import FileSpanCacheRepository

logger = logging.getLogger(__name__)


class DerilabArgumentParser(argparse.ArgumentParser):
    """ArgumentParser que convierte los errores de uso en excepciones del dominio."""

    def error(self, message: str) -> NoReturn:
        raise LineaDeComandosException(message)


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"Lista de enteros invalida: {text}") from e


def _common_arguments() -> argparse.ArgumentParser:
    common = DerilabArgumentParser(add_help=False)
    common.add_argument("--algebra", choices=[a.value for a in AlgebraKind])
    common.add_argument("--n", "--g", dest="size", type=int, help="Rango n o genero g")
    common.add_argument("--k", dest="degree", type=int, help="Peso (grado maximo en perfiles)")
    common.add_argument("--mode", choices=[m.value for m in Mode])
    common.add_argument("--ring", choices=[r.value for r in Ring])
    common.add_argument("--partitions", help="Filtro de particiones, p. ej. '2:1,1:2'")
    common.add_argument("--primes", type=_int_list, help="Primos separados por comas")
    common.add_argument("--seed", type=int)
    common.add_argument("--suite", choices=[s.value for s in VerifySuite])
    common.add_argument("--cases", type=int)
    common.add_argument("--spider", help="Colores de la arana separados por comas")
    common.add_argument("--certify", action="store_true")
    common.add_argument("--workers", type=int)
    common.add_argument("--cache-dir", dest="cache_dir")
    common.add_argument("--out", help="Ruta del informe; por defecto la salida estandar")
    common.add_argument(
        "--format", dest="output_format", choices=[f.value for f in OutputFormat]
    )
    common.add_argument("--heavy", action="store_true")
    return common


def build_parser() -> DerilabArgumentParser:
    parser = DerilabArgumentParser(
        prog="derilab", description="Banco de trabajo para algebras de derivaciones"
    )
    subparsers = parser.add_subparsers(dest="subcommand", required=True)
    common = _common_arguments()
    for name in SUBCOMMANDS:
        subparsers.add_parser(name, parents=[common])
    return parser


# Dependencias para inyeccion
def get_cache_repository(config: RunConfig) -> FileSpanCacheRepository | None:
    return FileSpanCacheRepository(config.cache_dir) if config.cache_dir else None


def handle_h1(config: RunConfig) -> ReportDocument:
    return EjecutarH1UseCase(get_cache_repository(config)).execute(config)


def handle_verify(config: RunConfig) -> ReportDocument:
    return VerificarUseCase().execute(config)


def handle_reduce_spider(config: RunConfig) -> ReportDocument:
    return ReducirAranaCLIUseCase().execute(config)


def handle_dims(config: RunConfig) -> ReportDocument:
    return DimensionesUseCase().execute(config)


def handle_generation_profile(config: RunConfig) -> ReportDocument:
    return PerfilGeneracionCLIUseCase().execute(config)


HANDLERS: dict[str, Callable[[RunConfig], ReportDocument]] = {
    "h1": handle_h1,
    "verify": handle_verify,
    "reduce-spider": handle_reduce_spider,
    "dims": handle_dims,
    "generation-profile": handle_generation_profile,
}


def parse_config(argv: Sequence[str] | None = None) -> RunConfig:
    namespace = build_parser().parse_args(argv)
    data: dict[str, Any] = vars(namespace)
    return RunConfig.validate_and_create(data)


def run(argv: Sequence[str] | None = None) -> int:
    """Ejecuta un subcomando y escribe su informe. Devuelve 0 si todo fue bien."""
    config = parse_config(argv)
    logger.info(f"derilab {config.subcommand}")
    report = HANDLERS[config.subcommand](config)
    write_report(report, config.output_format, config.out)
    if report.checks.get("failed"):
        failures = report.results[0].get("failures", []) if report.results else []
        suite = config.suite.value if config.suite else config.subcommand
        raise SuiteFallidaException(suite, failures)
    return 0
