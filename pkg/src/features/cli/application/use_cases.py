import logging
import time
from functools import partial
from typing import Any

from src.config.settings import settings
from src.domain.shared.custom_types import AlgebraKind, Mode
from src.features.cli.application.dtos import ReportDocument, RunConfig
from src.features.cli.domain.services.dimensions import dimension_row
from src.features.cli.domain.services.suites import run_suite
from src.features.cli.infrastructure.mappers import DimensionRowDTOMapper, SuiteOutcomeDTOMapper
from src.features.diagrams.application.dtos import ReducirAranaCommand
from src.features.diagrams.application.use_cases import (
    CertificarAranaUseCase,
    ReducirAranaUseCase,
    ReducirLoteUseCase,
)
from src.features.diagrams.domain.entities import ReductionCertificate
from src.features.diagrams.infrastructure.mappers import CertificateMapper
from src.features.homology.application.dtos import (
    CalcularH1Command,
    CoinvariantesCommand,
    H1ReportDto,
    PerfilGeneracionCommand,
)
from src.features.homology.application.interfaces.repositories import (
    AbstractSpanCacheRepository,
)
from src.features.homology.application.use_cases import (
    CalcularH1UseCase,
    CoinvariantesUseCase,
    ComprobarProyeccionUseCase,
    PerfilGeneracionUseCase,
)
from src.features.homology.domain.exceptions import EnsambladoDiscordanteException
from src.features.homology.domain.services.abelianization import in_bracket_image
from src.features.homology.domain.services.coinvariants import H1_PLUS_MODULES
from src.features.symplectic.domain.entities import Spider

logger = logging.getLogger(__name__)


def build_report(
    config: RunConfig,
    results: list[dict[str, Any]],
    started: float,
    checks: dict[str, int] | None = None,
) -> ReportDocument:
    return ReportDocument(
        subcommand=config.subcommand,
        config=config.echo(),
        results=results,
        timing={"wall_time": round(time.perf_counter() - started, 6)},
        checks=checks or {},
    )


class EjecutarH1UseCase:
    """Caso de uso para el subcomando h1."""

    def __init__(self, cache_repository: AbstractSpanCacheRepository | None = None):
        self.cache_repository = cache_repository

    def execute(self, config: RunConfig) -> ReportDocument:
        started = time.perf_counter()
        command = CalcularH1Command.validate_and_create(
            {
                "algebra": config.algebra,
                "size": config.size,
                "degree": config.degree,
                "mode": config.mode,
                "ring": config.ring,
                "partitions": config.partitions,
                "primes": config.primes,
                "workers": config.workers,
                "heavy": config.heavy,
            }
        )
        result = CalcularH1UseCase(self.cache_repository).execute(command)
        logger.info(f"h1 {result.algebra.value} k={result.degree}: {result.description}")
        payload = result.model_dump(mode="json", exclude={"wall_time"})
        payload.update(self._symplectic_checks(result, config.partitions is None))
        return build_report(config, [payload], started)

    @staticmethod
    def _symplectic_checks(result: H1ReportDto, all_partitions: bool) -> dict[str, Any]:
        """Contrasta h1 symp con la proyeccion C13 y con los sp-modulos conocidos.

        La comparacion con los modulos solo vale con todas las particiones.
        """
        if result.algebra != AlgebraKind.SYMP or not (
            2 <= result.size <= settings.SP_CHECK_MAX_GENUS
        ):
            return {}
        checks: dict[str, Any] = {}
        if result.degree == 2:
            projection = ComprobarProyeccionUseCase().execute(result.size)
            if not projection.holds:
                raise EnsambladoDiscordanteException(
                    f"proyeccion C13 en g={result.size}",
                    projection.target_dimension,
                    projection.h1_dimension,
                )
            checks["projection"] = projection.model_dump(mode="json")
        if all_partitions and result.mode == Mode.FULL and result.degree in H1_PLUS_MODULES:
            command = CoinvariantesCommand(
                modules=list(H1_PLUS_MODULES[result.degree]), genus=result.size
            )
            modules = CoinvariantesUseCase().execute(command)
            total = sum(module.dimension for module in modules)
            if total != result.coinvariant_part:
                raise EnsambladoDiscordanteException(
                    f"sp-coinvariantes de H1 en k={result.degree}",
                    total,
                    result.coinvariant_part or 0,
                )
            checks["module_coinvariants"] = [module.model_dump(mode="json") for module in modules]
        return checks


class VerificarUseCase:
    """Caso de uso para el subcomando verify.

    Devuelve el informe aunque haya fallos; quien escribe el informe decide el
    codigo de salida a partir de `checks["failed"]`.
    """

    def execute(self, config: RunConfig) -> ReportDocument:
        started = time.perf_counter()
        reducer = partial(self._reduce_batch, config.workers)
        outcome = run_suite(config.suite, config.seed, config.cases, config.size or 6, reducer)
        dto = SuiteOutcomeDTOMapper.to_dto(outcome)
        return build_report(
            config,
            [dto.model_dump(mode="json")],
            started,
            checks={"cases": outcome.cases, "failed": len(outcome.failures)},
        )

    @staticmethod
    def _reduce_batch(workers: int, spiders: list[Spider]) -> list[ReductionCertificate]:
        documents = ReducirLoteUseCase(workers).execute(spiders)
        return [CertificateMapper.to_entity(document) for document in documents]


class ReducirAranaCLIUseCase:
    """Caso de uso para reduce-spider, con certificacion opcional por ciclado y rango."""

    def execute(self, config: RunConfig) -> ReportDocument:
        started = time.perf_counter()
        command = ReducirAranaCommand.validate_and_create(
            {"spider": config.spider, "genus": config.size, "certify": config.certify}
        )
        if command.certify:
            checker = partial(in_bracket_image, workers=config.workers)
            report = CertificarAranaUseCase(checker).execute(command)
            result = report.model_dump(mode="json")
        else:
            result = ReducirAranaUseCase().execute(command).model_dump(mode="json")
        return build_report(config, [result], started, checks={"audited": 1, "failed": 0})


class DimensionesUseCase:
    """Caso de uso para el subcomando dims."""

    def execute(self, config: RunConfig) -> ReportDocument:
        started = time.perf_counter()
        row = dimension_row(config.algebra, config.size, config.degree)
        dto = DimensionRowDTOMapper.to_dto(row)
        return build_report(config, [dto.model_dump(mode="json")], started)


class PerfilGeneracionCLIUseCase:
    """Caso de uso para generation-profile; `degree` es el grado maximo."""

    def execute(self, config: RunConfig) -> ReportDocument:
        started = time.perf_counter()
        command = PerfilGeneracionCommand.validate_and_create(
            {
                "algebra": config.algebra,
                "size": config.size,
                "max_degree": config.degree,
                "workers": config.workers,
            }
        )
        rows = PerfilGeneracionUseCase().execute(command)
        return build_report(config, [row.model_dump(mode="json") for row in rows], started)
