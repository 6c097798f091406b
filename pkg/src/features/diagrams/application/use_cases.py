import logging
from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor

from src.config.settings import settings
from src.features.diagrams.application.dtos import (
    CertificateDocument,
    CertificationReportDto,
    ReducirAranaCommand,
)
from src.features.diagrams.domain.entities import ReductionCertificate
from src.features.diagrams.domain.services.audit import audit
from src.features.diagrams.domain.services.reduction import (
    certify_in_bracket_image,
    reduce_to_standard,
)
from src.features.diagrams.infrastructure.mappers import (
    CertificateMapper,
    CertificationReportDTOMapper,
)
from src.features.symplectic.domain.entities import Spider, SympDerivation
from src.features.symplectic.domain.services.spiders import combination_to_tensor

logger = logging.getLogger(__name__)

# Decide si un elemento de a_g(k) esta en la imagen del corchete
MembershipChecker = Callable[[SympDerivation], bool]


def _reduce_and_audit(colors: tuple[int, ...], genus: int) -> ReductionCertificate:
    certificate = reduce_to_standard(Spider(colors, genus))
    audit(certificate)
    return certificate


class ReducirAranaUseCase:
    """Caso de uso para reducir una arana a forma estandar con certificado auditado."""

    def execute(self, command: ReducirAranaCommand) -> CertificateDocument:
        spider = Spider(command.colors, command.genus)
        logger.info(f"Reduciendo {spider} con g={command.genus}")
        certificate = reduce_to_standard(spider)
        audit(certificate)
        return CertificateMapper.to_model(certificate)


class CertificarAranaUseCase:
    """Caso de uso para certificar que una arana esta en la imagen del corchete.

    Los restos que sobreviven al ciclado se comprueban con `membership_checker`
    si se proporciona.
    """

    def __init__(self, membership_checker: MembershipChecker | None = None):
        self.membership_checker = membership_checker

    def execute(self, command: ReducirAranaCommand) -> CertificationReportDto:
        spider = Spider(command.colors, command.genus)
        report = certify_in_bracket_image(spider)
        audit(report.certificate)
        remainder = report.certificate.remainder_combination()
        if remainder and self.membership_checker is not None:
            vector = combination_to_tensor(remainder, spider.genus, spider.degree)
            report.in_bracket_image = self.membership_checker(vector)
            logger.info(
                f"{spider}: pertenencia de {len(remainder)} restos por rango "
                f"= {report.in_bracket_image}"
            )
        return CertificationReportDTOMapper.to_dto(report)


class ReducirLoteUseCase:
    """Caso de uso para reducir muchas aranas en paralelo, una por proceso."""

    def __init__(self, workers: int | None = None):
        self.workers = workers or settings.DERILAB_WORKERS

    def execute(self, spiders: Sequence[Spider]) -> list[CertificateDocument]:
        logger.info(f"Reduciendo {len(spiders)} aranas con {self.workers} procesos")
        colors = [spider.colors for spider in spiders]
        genera = [spider.genus for spider in spiders]
        if self.workers == 1:
            certificates = [_reduce_and_audit(c, g) for c, g in zip(colors, genera)]
        else:
            with ProcessPoolExecutor(max_workers=self.workers) as executor:
                certificates = list(executor.map(_reduce_and_audit, colors, genera))
        return CertificateMapper.to_model_list(certificates)
