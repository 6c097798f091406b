from src.domain.shared.mappers import DTOMapper
from src.features.cli.application.dtos import DimensionRowDto, SuiteOutcomeDto
from src.features.cli.domain.entities import DimensionRow, SuiteOutcome


class SuiteOutcomeDTOMapper(DTOMapper[SuiteOutcome, SuiteOutcomeDto]):
    """Mapper entre SuiteOutcome y su DTO."""

    @staticmethod
    def to_dto(entity: SuiteOutcome) -> SuiteOutcomeDto:
        return SuiteOutcomeDto(
            suite=entity.suite,
            seed=entity.seed,
            cases=entity.cases,
            passed=entity.passed,
            failures=list(entity.failures),
            tallies=dict(entity.tallies),
        )


class DimensionRowDTOMapper(DTOMapper[DimensionRow, DimensionRowDto]):
    @staticmethod
    def to_dto(entity: DimensionRow) -> DimensionRowDto:
        return DimensionRowDto(
            algebra=entity.algebra,
            size=entity.size,
            degree=entity.degree,
            dimension=entity.dimension,
            parts=dict(entity.parts),
        )
