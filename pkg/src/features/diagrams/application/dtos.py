from typing import Any

from pydantic import BaseModel, Field, field_validator, model_validator

from src.config.settings import settings
from src.core.domain.base_dto import BaseDto
from src.domain.shared.exceptions import ValidationError
from src.domain.shared.validators.common import parse_spider_text, validate_genus


class BracketTermDto(BaseDto):
    """Sumando coefficient * [left, right] de un certificado."""

    left: list[int]
    right: list[int]
    coefficient: int


class RemainderTermDto(BaseDto):
    """Arana en forma estandar que queda fuera de los corchetes."""

    spider: list[int]
    coefficient: int
    pattern: int | None = None


class CertificateDocument(BaseDto):
    """Documento JSON de un certificado de reduccion."""

    schema_version: str = settings.SCHEMA_VERSION
    genus: int
    spider: list[int]
    brackets: list[BracketTermDto] = []
    remainder: list[RemainderTermDto] = []
    fresh_colors: list[int] = []
    steps: int = 0
    max_backtracks: int = 0
    max_multiplicity: int = 0

    @field_validator("schema_version")
    @classmethod
    def check_schema(cls, value: str) -> str:
        if value != settings.SCHEMA_VERSION:
            raise ValueError(f"Version de esquema {value} no soportada")
        return value


class NormalFormDto(BaseDto):
    """Resto en forma estandar y su recoloreo con c_i = i."""

    spider: list[int]
    normal_form: list[int]
    sign: int
    pattern: int | None = None


class CertificationReportDto(BaseDto):
    """Certificado completo con la ruta de pertenencia a la imagen del corchete."""

    certificate: CertificateDocument
    route: str
    residue: int
    cycled: list[list[int]] = []
    in_bracket_image: bool | None = None
    normal_forms: list[NormalFormDto] = []


class ReducirAranaCommand(BaseModel):
    """DTO para reducir una arana a forma estandar."""

    spider: str = Field(..., description="Colores separados por comas, p. ej. '1,4,-2,-1'")
    genus: int = Field(..., description="Genero g; la reduccion necesita g >= k+3")
    certify: bool = Field(False, description="Ademas cicla los restos en forma estandar")

    @field_validator("spider")
    @classmethod
    def check_spider(cls, value: str) -> str:
        parse_spider_text(value)
        return value

    @field_validator("genus")
    @classmethod
    def check_genus(cls, value: int) -> int:
        return validate_genus(value)

    @model_validator(mode="after")
    def validate_colors_in_genus(self) -> "ReducirAranaCommand":
        if max(abs(c) for c in self.colors) > self.genus:
            raise ValueError(f"La arana {self.spider} usa colores fuera de g={self.genus}")
        return self

    @property
    def colors(self) -> tuple[int, ...]:
        return parse_spider_text(self.spider)

    @classmethod
    def validate_and_create(cls, data: dict[str, Any]) -> "ReducirAranaCommand":
        """Valida los datos y crea una instancia del comando."""
        try:
            return cls(**data)
        except ValueError as e:
            raise ValidationError(details={"errors": str(e)}) from e
