from abc import abstractmethod

from src.features.homology.domain.entities import SpanCacheEntry
from src.infrastructure.interfaces.repositories import AbstractBaseRepository


class AbstractSpanCacheRepository(AbstractBaseRepository[SpanCacheEntry]):
    """Interfaz abstracta para la cache de resultados de H1 direccionada por contenido."""

    @abstractmethod
    def add(self, key: str, entity: SpanCacheEntry) -> SpanCacheEntry:
        """Guarda el resultado bajo el digest de la configuracion."""

    @abstractmethod
    def get_by_key(self, key: str) -> SpanCacheEntry | None:
        """Obtiene el resultado guardado, o None si no existe o esta corrupto."""

    @abstractmethod
    def delete(self, key: str) -> None:
        pass

    @abstractmethod
    def keys(self) -> list[str]:
        """Claves guardadas, en orden."""
