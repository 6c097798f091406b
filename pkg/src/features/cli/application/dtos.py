from typing import Any

from pydantic import BaseModel, Field, field_validator, model_validator

from src.config.settings import settings
from src.core.domain.base_dto import BaseDto
from src.domain.shared.custom_types import (
    AlgebraCapabilities,
    AlgebraKind,
    Mode,
    OutputFormat,
    Ring,
    VerifySuite,
)
from src.domain.shared.validators.common import validate_degree, validate_rank
from src.infrastructure.utils.validation import validate_model

SUBCOMMANDS = ("h1", "verify", "reduce-spider", "dims", "generation-profile")

# Campos que necesita cada subcomando ademas de los que tienen valor por defecto
_REQUIRED: dict[str, tuple[str, ...]] = {
    "h1": ("algebra", "size", "degree"),
    "verify": ("suite", "seed"),
    "reduce-spider": ("spider", "size"),
    "dims": ("algebra", "size", "degree"),
    "generation-profile": ("algebra", "size", "degree"),
}


class SuiteOutcomeDto(BaseDto):
    suite: str
    seed: int
    cases: int
    passed: bool
    failures: list[str] = []
    tallies: dict[str, int] = {}


class DimensionRowDto(BaseDto):
    algebra: str
    size: int
    degree: int
    dimension: int
    parts: dict[str, int] = {}


class RunConfig(BaseModel):
    """DTO con la configuracion completa de una corrida de la linea de comandos."""

    subcommand: str = Field(..., description=f"Uno de: {', '.join(SUBCOMMANDS)}")
    algebra: AlgebraKind | None = Field(None, description="assoc, lie, symp o lie-symp")
    size: int | None = Field(None, description="Rango n o genero g")
    degree: int | None = Field(None, description="Peso k (grado maximo en generation-profile)")
    mode: Mode = Mode.PLUS
    ring: Ring | None = Field(None, description="Por defecto z, o q en las simplecticas")
    partitions: str | None = None
    primes: list[int] | None = None
    seed: int | None = Field(None, description="Obligatoria en las baterias aleatorias")
    suite: VerifySuite | None = None
    cases: int = Field(50, description="Sorteos por bateria")
    spider: str | None = Field(None, description="Colores separados por comas")
    certify: bool = False
    workers: int = Field(default_factory=lambda: settings.DERILAB_WORKERS)
    cache_dir: str | None = Field(default_factory=lambda: settings.DERILAB_CACHE)
    out: str | None = None
    output_format: OutputFormat = OutputFormat.JSON
    heavy: bool = False

    @field_validator("subcommand")
    @classmethod
    def check_subcommand(cls, value: str) -> str:
        if value not in SUBCOMMANDS:
            raise ValueError(f"Subcomando desconocido: {value}")
        return value

    @field_validator("size")
    @classmethod
    def check_size(cls, value: int | None) -> int | None:
        return None if value is None else validate_rank(value, "tamaño")

    @field_validator("degree")
    @classmethod
    def check_degree(cls, value: int | None) -> int | None:
        return None if value is None else validate_degree(value)

    @field_validator("workers", "cases")
    @classmethod
    def check_positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError("Debe ser al menos 1")
        return value

    @model_validator(mode="after")
    def validate_required(self) -> "RunConfig":
        missing = [name for name in _REQUIRED[self.subcommand] if getattr(self, name) is None]
        if missing:
            raise ValueError(f"{self.subcommand} necesita: {', '.join(missing)}")
        if self.ring is None and self.algebra is not None:
            symplectic = AlgebraCapabilities.is_symplectic(self.algebra)
            self.ring = Ring.Q if symplectic else Ring.Z
        return self

    def echo(self) -> dict[str, Any]:
        """Configuracion tal como se copia en el informe."""
        return self.model_dump(mode="json", exclude={"out"})

    @classmethod
    def validate_and_create(cls, data: dict[str, Any]) -> "RunConfig":
        """Valida los datos y crea una instancia de la configuracion."""
        return validate_model(cls, {k: v for k, v in data.items() if v is not None})


class ReportDocument(BaseDto):
    """Informe versionado de una corrida; solo `timing` depende de la maquina."""

    schema_version: str = settings.SCHEMA_VERSION
    tool: str = settings.PROJECT_NAME
    version: str = settings.VERSION
    subcommand: str
    config: dict[str, Any]
    results: list[dict[str, Any]] = []
    timing: dict[str, float] = {}
    checks: dict[str, int] = {}
