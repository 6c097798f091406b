import logging
from pathlib import Path

from pydantic import ValidationError as PydanticValidationError

from src.features.homology.application.interfaces.repositories import (
    AbstractSpanCacheRepository,
)
from src.features.homology.domain.entities import SpanCacheEntry
from src.features.homology.infrastructure.mappers import SpanCacheMapper
from src.features.homology.infrastructure.models import SpanCacheDocument

logger = logging.getLogger(__name__)


class FileSpanCacheRepository(AbstractSpanCacheRepository):
    """Repositorio de cache en disco: un archivo JSON por clave."""

    def __init__(self, directory: str | Path):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)

    def _path(self, key: str) -> Path:
        return self.directory / f"{key}.json"

    def add(self, key: str, entity: SpanCacheEntry) -> SpanCacheEntry:
        document = SpanCacheMapper.to_model(entity)
        path = self._path(key)
        # Escritura atomica: primero a un temporal y luego rename
        partial = path.with_suffix(".tmp")
        partial.write_text(document.model_dump_json(indent=2), encoding="utf-8")
        partial.replace(path)
        logger.debug(f"Cache guardada en {path}")
        return entity

    def get_by_key(self, key: str) -> SpanCacheEntry | None:
        path = self._path(key)
        if not path.exists():
            return None
        try:
            document = SpanCacheDocument.model_validate_json(path.read_text(encoding="utf-8"))
        except PydanticValidationError as e:
            logger.warning(f"Entrada de cache ilegible en {path} ({e.error_count()} errores)")
            return None
        if document.key != key:
            logger.warning(f"La entrada {path} guarda la clave {document.key}, se descarta")
            return None
        return SpanCacheMapper.to_entity(document)

    def delete(self, key: str) -> None:
        self._path(key).unlink(missing_ok=True)

    def keys(self) -> list[str]:
        return sorted(path.stem for path in self.directory.glob("*.json"))
