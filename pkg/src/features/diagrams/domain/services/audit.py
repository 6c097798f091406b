"""Auditoria de certificados: la identidad se comprueba en el algebra tensorial."""

import logging

from src.features.diagrams.domain.entities import ReductionCertificate
from src.features.diagrams.domain.exceptions import CertificadoInvalidoException
from src.features.symplectic.domain.entities import SympDerivation
from src.features.symplectic.domain.services.spiders import bracket_symp, spider_to_tensor

logger = logging.getLogger(__name__)


def certificate_residual(certificate: ReductionCertificate) -> SympDerivation:
    """S - sum c [L, R] - sum c' T, con los corchetes calculados en Der(T(H))."""
    residual = spider_to_tensor(certificate.spider)
    for term in certificate.brackets:
        bracket = bracket_symp(spider_to_tensor(term.left), spider_to_tensor(term.right))
        residual = residual - bracket.scale(term.coefficient)
    for spider, coefficient in certificate.remainder:
        residual = residual - spider_to_tensor(spider).scale(coefficient)
    return residual


def audit(certificate: ReductionCertificate) -> None:
    residual = certificate_residual(certificate)
    if not residual.is_zero():
        raise CertificadoInvalidoException(str(certificate.spider), len(residual))
    logger.debug(
        f"Certificado de {certificate.spider} auditado: {len(certificate.brackets)} corchetes"
    )
