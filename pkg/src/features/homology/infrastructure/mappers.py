from src.domain.shared.mappers import DTOMapper, Mapper
from src.features.homology.application.dtos import (
    CoinvariantsDto,
    GenerationRowDto,
    H1ReportDto,
    ProjectionCheckDto,
)
from src.features.homology.domain.entities import (
    CoinvariantsResult,
    GenerationRow,
    H1Result,
    ProjectionCheck,
    SpanCacheEntry,
)
from src.features.homology.infrastructure.models import SpanCacheDocument


class H1ReportDTOMapper(DTOMapper[H1Result, H1ReportDto]):
    """Mapper entre H1Result y su DTO."""

    @staticmethod
    def to_dto(entity: H1Result) -> H1ReportDto:
        return H1ReportDto(
            algebra=entity.algebra,
            size=entity.size,
            degree=entity.degree,
            mode=entity.mode,
            ring=entity.ring,
            partitions=[list(p) for p in entity.partitions],
            target_dimension=entity.target_dimension,
            column_count=entity.column_count,
            rank=entity.rank,
            free_rank=entity.free_rank,
            torsion=list(entity.torsion),
            description=entity.description(),
            early_exit=entity.early_exit,
            ranks_by_prime={str(p): r for p, r in entity.ranks_by_prime},
            plus_free_rank=entity.plus_free_rank,
            coinvariant_part=entity.coinvariant_part,
            degree_zero_part=entity.degree_zero_part,
        )

    @staticmethod
    def to_entity(dto: H1ReportDto) -> H1Result:
        return H1Result(
            algebra=dto.algebra,
            size=dto.size,
            degree=dto.degree,
            mode=dto.mode,
            ring=dto.ring,
            partitions=tuple((p[0], p[1]) for p in dto.partitions),
            target_dimension=dto.target_dimension,
            column_count=dto.column_count,
            rank=dto.rank,
            free_rank=dto.free_rank,
            torsion=tuple(dto.torsion),
            early_exit=dto.early_exit,
            ranks_by_prime=tuple((int(p), r) for p, r in dto.ranks_by_prime.items()),
            plus_free_rank=dto.plus_free_rank,
            coinvariant_part=dto.coinvariant_part,
            degree_zero_part=dto.degree_zero_part,
        )


class GenerationRowDTOMapper(DTOMapper[GenerationRow, GenerationRowDto]):
    @staticmethod
    def to_dto(entity: GenerationRow) -> GenerationRowDto:
        return GenerationRowDto(
            degree=entity.degree,
            partitions=[list(p) for p in entity.partitions],
            rank=entity.rank,
            target_dimension=entity.target_dimension,
            full_rank=entity.full_rank,
            spans_image=entity.spans_image,
        )


class CoinvariantsDTOMapper(DTOMapper[CoinvariantsResult, CoinvariantsDto]):
    @staticmethod
    def to_dto(entity: CoinvariantsResult) -> CoinvariantsDto:
        return CoinvariantsDto(
            module=entity.module,
            module_dimension=entity.module_dimension,
            dimension=entity.dimension,
        )


class ProjectionCheckDTOMapper(DTOMapper[ProjectionCheck, ProjectionCheckDto]):
    @staticmethod
    def to_dto(entity: ProjectionCheck) -> ProjectionCheckDto:
        return ProjectionCheckDto(
            genus=entity.genus,
            h1_dimension=entity.h1_dimension,
            target_dimension=entity.target_dimension,
            kills_brackets=entity.kills_brackets,
            surjective=entity.surjective,
            holds=entity.holds,
        )


class SpanCacheMapper(Mapper[SpanCacheEntry, SpanCacheDocument]):
    """Mapper entre SpanCacheEntry y su archivo JSON."""

    @staticmethod
    def to_model(entity: SpanCacheEntry) -> SpanCacheDocument:
        return SpanCacheDocument(
            key=entity.key,
            basis_digest=entity.basis_digest,
            column_digest=entity.column_digest,
            result=H1ReportDTOMapper.to_dto(entity.result),
            columns_consumed=entity.columns_consumed,
        )

    @staticmethod
    def to_entity(model: SpanCacheDocument) -> SpanCacheEntry:
        return SpanCacheEntry(
            key=model.key,
            basis_digest=model.basis_digest,
            column_digest=model.column_digest,
            result=H1ReportDTOMapper.to_entity(model.result),
            columns_consumed=model.columns_consumed,
        )
