import json

import pytest
from pydantic import ValidationError as PydanticValidationError

from src.domain.shared.exceptions import EXIT_AUDIT_FAILURE
from src.features.diagrams.domain.exceptions import CertificadoInvalidoException
from src.features.diagrams.domain.services.reduction import (
    certify_in_bracket_image,
    reduce_to_standard,
)
from src.features.diagrams.infrastructure.mappers import (
    CertificateMapper,
    CertificationReportDTOMapper,
)
from src.features.symplectic.domain.entities import Spider


@pytest.fixture
def certificate():
    """Fixture con el certificado de una arana separable de grado 4."""
    return reduce_to_standard(Spider((1, -1, 2, -2, 3, -3), 7))


class TestCertificateMapper:
    """Pruebas para el mapper de certificados."""

    def test_ida_y_vuelta(self, certificate):
        """Prueba que el JSON devuelve el mismo certificado, ya auditado."""
        assert CertificateMapper.loads(CertificateMapper.dumps(certificate)) == certificate

    def test_ida_y_vuelta_con_restos(self):
        """Prueba lo mismo con un certificado que tiene restos en forma estandar."""
        certificate = reduce_to_standard(Spider((1, 2, -1, 3, -2, 4, -3, -4), 9))
        document = CertificateMapper.to_model(certificate)
        assert document.remainder[0].pattern == 4
        assert CertificateMapper.to_entity(document) == certificate

    def test_certificado_alterado(self, certificate):
        """Prueba que un coeficiente alterado no pasa la auditoria."""
        data = json.loads(CertificateMapper.dumps(certificate))
        data["brackets"][0]["coefficient"] = 2
        with pytest.raises(CertificadoInvalidoException) as excinfo:
            CertificateMapper.loads(json.dumps(data))
        assert excinfo.value.exit_code == EXIT_AUDIT_FAILURE

    def test_version_de_esquema(self, certificate):
        """Prueba que otra version de esquema se rechaza."""
        data = json.loads(CertificateMapper.dumps(certificate))
        data["schema_version"] = "derilab/0"
        with pytest.raises(PydanticValidationError):
            CertificateMapper.loads(json.dumps(data))


class TestCertificationReportDTOMapper:
    """Pruebas para el mapper de informes de certificacion."""

    def test_to_dto(self):
        """Prueba la ruta y el residuo en el DTO."""
        dto = CertificationReportDTOMapper.to_dto(
            certify_in_bracket_image(Spider((1, -1, 2, -2, 3, -3), 7))
        )
        assert dto.route == "cycling"
        assert dto.residue == 0
        assert dto.cycled == []
        assert len(dto.certificate.brackets) == 1
