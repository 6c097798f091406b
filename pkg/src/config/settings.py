import os

from pydantic import field_validator
from pydantic_settings import BaseSettings

from src.domain.shared.validators.common import validate_primes


class Settings(BaseSettings):
    """Configuración de la aplicación."""

    # Identificacion
    PROJECT_NAME: str = "derilab"
    VERSION: str = "0.1.0"
    SCHEMA_VERSION: str = "derilab/1"

    # Paralelismo y cache en disco
    DERILAB_WORKERS: int = os.cpu_count() or 1
    DERILAB_CACHE: str | None = None

    # Primos para las sombras modulares (30 bits)
    PRIMES: list[int] = [1073741789, 1073741783, 1073741741]

    # Guardas de tamaño
    SNF_MAX_COLUMNS: int = 5000  # columnas que admite la fase densa de Smith
    HEAVY_COLUMN_THRESHOLD: int = 2_000_000  # por encima hace falta --heavy
    MAX_TARGET_DIMENSION: int = 250_000
    COLUMN_CHUNK_SIZE: int = 2048

    # Presupuesto de pasos de la reduccion: (longitud + m(C)) * factor
    REDUCTION_STEP_FACTOR: int = 64

    # Recalcular el digest de las columnas antes de reutilizar la cache en disco
    CACHE_VERIFY_COLUMNS: bool = True

    # Entradas maximas de la memoizacion en memoria (LRU)
    MEMO_MAX_ENTRIES: int = 4096

    # Genero maximo para las comprobaciones sp que acompañan a h1 symp
    SP_CHECK_MAX_GENUS: int = 3

    # Configuración de logs
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO")
    LOG_FORMAT: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    LOG_DATEFORMAT: str = "%Y-%m-%d %H:%M:%S"

    @field_validator("PRIMES")
    @classmethod
    def check_primes(cls, v: list[int]) -> list[int]:
        return validate_primes(v, "PRIMES")

    @field_validator("DERILAB_WORKERS")
    @classmethod
    def check_workers(cls, v: int) -> int:
        if v < 1:
            raise ValueError("DERILAB_WORKERS debe ser al menos 1")
        return v

    class Config:
        case_sensitive = True
        env_file = ".env"
        extra = "ignore"


# Instancia global de configuración
settings = Settings()
