import logging
import time

from src.config.settings import settings
from src.features.homology.application.dtos import (
    CalcularH1Command,
    CoinvariantesCommand,
    CoinvariantsDto,
    GenerationRowDto,
    H1ReportDto,
    PerfilGeneracionCommand,
    ProjectionCheckDto,
)
from src.features.homology.application.interfaces.repositories import (
    AbstractSpanCacheRepository,
)
from src.features.homology.domain.entities import Partition, SpanCacheEntry
from src.features.homology.domain.services.abelianization import (
    c13_projection_check,
    generation_profile,
    h1_weight,
)
from src.features.homology.domain.services.coinvariants import sp_coinvariants
from src.features.homology.domain.services.digests import (
    ColumnDigest,
    basis_digest,
    cache_key,
    column_digest_of,
)
from src.features.homology.domain.services.graded_algebras import algebra_for
from src.features.homology.domain.services.span import bracket_span, default_partitions
from src.features.homology.infrastructure.mappers import (
    CoinvariantsDTOMapper,
    GenerationRowDTOMapper,
    H1ReportDTOMapper,
    ProjectionCheckDTOMapper,
)

logger = logging.getLogger(__name__)


class CalcularH1UseCase:
    """Caso de uso para calcular H1 de peso k, con cache en disco opcional.

    Una entrada de la cache solo se reutiliza si el digest de las bases coincide
    con el recalculado y, con CACHE_VERIFY_COLUMNS, tambien el de las columnas que
    consumio la eliminacion; si no, se descarta y se vuelve a calcular.
    """

    def __init__(self, cache_repository: AbstractSpanCacheRepository | None = None):
        self.cache_repository = cache_repository

    def execute(self, command: CalcularH1Command) -> H1ReportDto:
        started = time.perf_counter()
        algebra = algebra_for(command.algebra, command.size)
        algebra.check_range(command.degree, command.mode, command.ring)
        partitions = command.partition_pairs or list(
            default_partitions(command.degree, command.mode)
        )
        key = cache_key(
            algebra, command.degree, command.mode, command.ring, partitions, command.primes
        )
        digest = None
        if self.cache_repository is not None:
            digest = basis_digest(algebra, command.degree, partitions)
            entry = self.cache_repository.get_by_key(key)
            if entry is not None and self._is_valid(entry, digest, command, partitions):
                logger.info(f"Cache reutilizada para {algebra.name} k={command.degree}")
                return H1ReportDTOMapper.to_dto(entry.result).model_copy(
                    update={
                        "wall_time": time.perf_counter() - started,
                        "cache_key": key,
                        "cache_hit": True,
                    }
                )
            if entry is not None:
                logger.warning(f"La entrada {key[:12]} no coincide con la base actual, se descarta")
                self.cache_repository.delete(key)

        columns = ColumnDigest()
        result = h1_weight(
            command.algebra,
            command.size,
            command.degree,
            command.mode,
            command.ring,
            partitions=partitions,
            primes=command.primes,
            workers=command.workers,
            heavy=command.heavy,
            column_digest=columns,
        )
        if self.cache_repository is not None and digest is not None:
            self.cache_repository.add(
                key, SpanCacheEntry(key, digest, columns.hexdigest(), result, columns.columns)
            )
        return H1ReportDTOMapper.to_dto(result).model_copy(
            update={
                "wall_time": time.perf_counter() - started,
                "cache_key": key if self.cache_repository is not None else None,
            }
        )

    @staticmethod
    def _is_valid(
        entry: SpanCacheEntry,
        digest: str,
        command: CalcularH1Command,
        partitions: list[Partition],
    ) -> bool:
        if entry.basis_digest != digest:
            return False
        if not settings.CACHE_VERIFY_COLUMNS:
            return True
        algebra = algebra_for(command.algebra, command.size)
        matrix = bracket_span(algebra, command.degree, partitions, workers=command.workers)
        return column_digest_of(matrix, entry.columns_consumed) == entry.column_digest


class PerfilGeneracionUseCase:
    """Caso de uso para comparar los rangos de subconjuntos de particiones."""

    def execute(self, command: PerfilGeneracionCommand) -> list[GenerationRowDto]:
        rows = generation_profile(
            command.algebra, command.size, command.max_degree, command.workers
        )
        return GenerationRowDTOMapper.to_dto_list(rows)


class CoinvariantesUseCase:
    """Caso de uso para las sp-coinvariantes de una lista de modulos."""

    def execute(self, command: CoinvariantesCommand) -> list[CoinvariantsDto]:
        results = sp_coinvariants(command.modules, command.genus)
        return CoinvariantsDTOMapper.to_dto_list(results)


class ComprobarProyeccionUseCase:
    """Caso de uso para comprobar que H1(a_g+)_2 se factoriza por C13."""

    def execute(self, genus: int) -> ProjectionCheckDto:
        return ProjectionCheckDTOMapper.to_dto(c13_projection_check(genus))
