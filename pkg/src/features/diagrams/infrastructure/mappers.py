import logging

from src.domain.shared.mappers import DTOMapper, Mapper
from src.features.diagrams.application.dtos import (
    BracketTermDto,
    CertificateDocument,
    CertificationReportDto,
    NormalFormDto,
    RemainderTermDto,
)
from src.features.diagrams.domain.entities import (
    BracketTerm,
    CertificationReport,
    ReductionCertificate,
)
from src.features.diagrams.domain.services.audit import audit
from src.features.diagrams.domain.services.chord_diagrams import match_standard_form
from src.features.symplectic.domain.entities import Spider

logger = logging.getLogger(__name__)


def _pattern(colors: tuple[int, ...]) -> int | None:
    match = match_standard_form(colors)
    return match[0] if match else None


class CertificateMapper(Mapper[ReductionCertificate, CertificateDocument]):
    """Mapper entre ReductionCertificate y su documento JSON.

    Al cargar un documento el certificado se vuelve a auditar.
    """

    @staticmethod
    def to_model(entity: ReductionCertificate) -> CertificateDocument:
        remainder = []
        for spider, coefficient in entity.remainder:
            remainder.append(
                RemainderTermDto(
                    spider=list(spider.colors),
                    coefficient=int(coefficient),
                    pattern=_pattern(spider.colors),
                )
            )
        return CertificateDocument(
            genus=entity.genus,
            spider=list(entity.spider.colors),
            brackets=[
                BracketTermDto(
                    left=list(term.left.colors),
                    right=list(term.right.colors),
                    coefficient=int(term.coefficient),
                )
                for term in entity.brackets
            ],
            remainder=remainder,
            fresh_colors=list(entity.fresh_colors),
            steps=entity.steps,
            max_backtracks=entity.max_backtracks,
            max_multiplicity=entity.max_multiplicity,
        )

    @staticmethod
    def to_entity(model: CertificateDocument) -> ReductionCertificate:
        genus = model.genus
        certificate = ReductionCertificate(
            spider=Spider(tuple(model.spider), genus),
            brackets=tuple(
                BracketTerm(
                    Spider(tuple(term.left), genus),
                    Spider(tuple(term.right), genus),
                    term.coefficient,
                )
                for term in model.brackets
            ),
            remainder=tuple(
                (Spider(tuple(term.spider), genus), term.coefficient) for term in model.remainder
            ),
            fresh_colors=tuple(model.fresh_colors),
            steps=model.steps,
            max_backtracks=model.max_backtracks,
            max_multiplicity=model.max_multiplicity,
        )
        audit(certificate)
        return certificate

    @classmethod
    def dumps(cls, entity: ReductionCertificate) -> str:
        return cls.to_model(entity).model_dump_json(indent=2)

    @classmethod
    def loads(cls, text: str) -> ReductionCertificate:
        return cls.to_entity(CertificateDocument.model_validate_json(text))


class CertificationReportDTOMapper(DTOMapper[CertificationReport, CertificationReportDto]):
    """Mapper entre CertificationReport y su DTO."""

    @staticmethod
    def to_dto(entity: CertificationReport) -> CertificationReportDto:
        return CertificationReportDto(
            certificate=CertificateMapper.to_model(entity.certificate),
            route=entity.route.value,
            residue=entity.residue,
            cycled=[list(spider.colors) for spider in entity.cycled],
            in_bracket_image=entity.in_bracket_image,
            normal_forms=[
                NormalFormDto(
                    spider=list(term.colors),
                    normal_form=list(image.colors),
                    sign=sign,
                    pattern=_pattern(image.colors),
                )
                for term, (sign, image) in entity.normal_forms.items()
            ],
        )
