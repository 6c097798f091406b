from abc import ABC, abstractmethod
from typing import Generic, TypeVar

# TypeVar para el tipo de entidad con el que trabaja el repositorio
T = TypeVar("T")


class AbstractBaseRepository(ABC, Generic[T]):
    """Interfaz base genérica para repositorios direccionados por contenido.

    Las entidades se guardan bajo una clave de texto (un digest). Cada repositorio
    concreto decide el medio (disco, memoria) y puede agregar metodos propios.
    """

    @abstractmethod
    def add(self, key: str, entity: T) -> T:
        """Agrega una entidad bajo una clave.

        Args:
            key: Clave de contenido.
            entity: La entidad a guardar.

        Returns:
            La entidad guardada.
        """

    @abstractmethod
    def get_by_key(self, key: str) -> T | None:
        """Obtiene una entidad por su clave.

        Args:
            key: Clave de contenido.

        Returns:
            La entidad encontrada o None si no existe.
        """

    @abstractmethod
    def delete(self, key: str) -> None:
        """Elimina la entidad guardada bajo la clave, si existe."""
