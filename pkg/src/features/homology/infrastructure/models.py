from pydantic import field_validator

from src.config.settings import settings
from src.core.domain.base_dto import BaseDto
from src.features.homology.application.dtos import H1ReportDto


class SpanCacheDocument(BaseDto):
    """Archivo JSON de una entrada de la cache de corridas."""

    schema_version: str = settings.SCHEMA_VERSION
    key: str
    basis_digest: str
    column_digest: str
    result: H1ReportDto
    columns_consumed: int = 0

    @field_validator("schema_version")
    @classmethod
    def check_schema(cls, value: str) -> str:
        if value != settings.SCHEMA_VERSION:
            raise ValueError(f"Version de esquema {value} no soportada")
        return value
