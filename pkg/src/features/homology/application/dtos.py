from typing import Any

from pydantic import BaseModel, Field, field_validator, model_validator

from src.core.domain.base_dto import BaseDto
from src.domain.shared.custom_types import AlgebraCapabilities, AlgebraKind, Mode, Ring
from src.domain.shared.exceptions import ValidationError
from src.domain.shared.validators.common import (
    parse_partitions_text,
    validate_degree,
    validate_genus,
    validate_partitions,
    validate_primes,
    validate_rank,
)
from src.features.homology.domain.services.coinvariants import MODULE_BUILDERS


class H1ReportDto(BaseDto):
    """DTO con el H1 de peso k de un algebra graduada."""

    algebra: AlgebraKind
    size: int
    degree: int
    mode: Mode
    ring: Ring
    partitions: list[list[int]]
    target_dimension: int
    column_count: int
    rank: int
    free_rank: int
    torsion: list[int] = []
    description: str
    early_exit: bool = False
    ranks_by_prime: dict[str, int] = {}
    plus_free_rank: int | None = None
    coinvariant_part: int | None = None
    degree_zero_part: int | None = None
    wall_time: float = 0.0
    cache_key: str | None = None
    cache_hit: bool = False


class GenerationRowDto(BaseDto):
    """Fila del perfil de generacion."""

    degree: int
    partitions: list[list[int]]
    rank: int
    target_dimension: int
    full_rank: int
    spans_image: bool


class CoinvariantsDto(BaseDto):
    module: str
    module_dimension: int
    dimension: int


class ProjectionCheckDto(BaseDto):
    """Resultado de la comprobacion de la proyeccion C13 en peso 2."""

    genus: int
    h1_dimension: int
    target_dimension: int
    kills_brackets: bool
    surjective: bool
    holds: bool


class CalcularH1Command(BaseModel):
    """DTO para calcular H1 de peso k."""

    algebra: AlgebraKind = Field(..., description="assoc, lie, symp o lie-symp")
    size: int = Field(..., description="Rango n o genero g segun el algebra")
    degree: int = Field(..., description="Peso k")
    mode: Mode = Field(Mode.PLUS, description="plus: solo g+, full: tambien g(0)")
    ring: Ring = Field(Ring.Z, description="Anillo de coeficientes")
    partitions: str | None = Field(None, description="Filtro de particiones, p. ej. '2:1,1:2'")
    primes: list[int] | None = Field(None, description="Primos para ring=modp")
    workers: int = Field(1, description="Procesos para generar columnas")
    heavy: bool = Field(False, description="Permite corridas por encima del umbral de columnas")

    @field_validator("size")
    @classmethod
    def check_size(cls, value: int) -> int:
        return validate_rank(value, "tamaño")

    @field_validator("degree")
    @classmethod
    def check_degree(cls, value: int) -> int:
        return validate_degree(value)

    @field_validator("primes")
    @classmethod
    def check_primes(cls, value: list[int] | None) -> list[int] | None:
        return None if value is None else validate_primes(value)

    @field_validator("workers")
    @classmethod
    def check_workers(cls, value: int) -> int:
        if value < 1:
            raise ValueError("Se necesita al menos un proceso")
        return value

    @model_validator(mode="after")
    def validate_run(self) -> "CalcularH1Command":
        if not AlgebraCapabilities.supports_ring(self.algebra, self.ring):
            raise ValueError(
                f"El algebra {self.algebra.value} no admite el anillo {self.ring.value}"
            )
        if self.partitions is not None and not self.partition_pairs:
            raise ValueError("El filtro de particiones esta vacio")
        return self

    @property
    def partition_pairs(self) -> list[tuple[int, int]] | None:
        """Particiones normalizadas, o None si se usan todas las del modo."""
        if self.partitions is None:
            return None
        return validate_partitions(
            parse_partitions_text(self.partitions),
            self.degree,
            allow_zero=self.mode == Mode.FULL,
        )

    @classmethod
    def validate_and_create(cls, data: dict[str, Any]) -> "CalcularH1Command":
        """Valida los datos y crea una instancia del comando."""
        try:
            return cls(**data)
        except ValueError as e:
            raise ValidationError(details={"errors": str(e)}) from e


class PerfilGeneracionCommand(BaseModel):
    """DTO para el perfil de generacion hasta un grado maximo."""

    algebra: AlgebraKind = Field(..., description="assoc, lie, symp o lie-symp")
    size: int = Field(..., description="Rango n o genero g")
    max_degree: int = Field(..., description="Grado maximo, al menos 2")
    workers: int = Field(1, description="Procesos para generar columnas")

    @field_validator("size")
    @classmethod
    def check_size(cls, value: int) -> int:
        return validate_rank(value, "tamaño")

    @field_validator("max_degree")
    @classmethod
    def check_max_degree(cls, value: int) -> int:
        if value < 2:
            raise ValueError("El grado maximo debe ser al menos 2")
        return value

    @classmethod
    def validate_and_create(cls, data: dict[str, Any]) -> "PerfilGeneracionCommand":
        try:
            return cls(**data)
        except ValueError as e:
            raise ValidationError(details={"errors": str(e)}) from e


class CoinvariantesCommand(BaseModel):
    """DTO para las sp-coinvariantes de modulos de potencias tensoriales de H."""

    modules: list[str] = Field(..., description=f"Modulos: {', '.join(MODULE_BUILDERS)}")
    genus: int = Field(..., description="Genero g")

    @field_validator("modules")
    @classmethod
    def check_modules(cls, value: list[str]) -> list[str]:
        unknown = [name for name in value if name not in MODULE_BUILDERS]
        if unknown:
            raise ValueError(f"Modulos desconocidos: {', '.join(unknown)}")
        if not value:
            raise ValueError("Hace falta al menos un modulo")
        return value

    @field_validator("genus")
    @classmethod
    def check_genus(cls, value: int) -> int:
        return validate_genus(value)

    @classmethod
    def validate_and_create(cls, data: dict[str, Any]) -> "CoinvariantesCommand":
        try:
            return cls(**data)
        except ValueError as e:
            raise ValidationError(details={"errors": str(e)}) from e
