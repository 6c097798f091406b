"""Adaptadores uniformes de las cuatro algebras graduadas.

Cada algebra da una base de g(k) y las coordenadas de un corchete [x, y] en un
sistema de coordenadas de g(i+j) en el que g(i+j) se sumerge. Para lie-symp ese
sistema es el de Der(L_2g): el rango de un conjunto de columnas no depende de ello.
"""

import logging
from abc import ABC, abstractmethod
from collections.abc import Sequence
from typing import Any

from src.domain.shared.custom_types import AlgebraCapabilities, AlgebraKind, Mode, Ring
from src.features.derivations.domain.services.associative import (
    assoc_basis,
    assoc_dimension,
    bracket_assoc,
)
from src.features.derivations.domain.services.lie import (
    bracket_lie_der,
    lie_der_basis,
    lie_der_basis_keys,
    lie_der_dimension,
)
from src.features.homology.domain.entities import Coefficients
from src.features.homology.domain.exceptions import (
    AlgebraNoSoportadaException,
    FueraDeRangoException,
)
from src.features.symplectic.domain.entities import Spider
from src.features.symplectic.domain.services.spiders import (
    SpiderCombination,
    a_basis,
    a_dimension,
    bracket_spider,
    orbit_coordinates,
)
from src.features.symplectic.domain.services.symplectic_lie import h_basis
from src.infrastructure.cache import cached

logger = logging.getLogger(__name__)


@cached(key_prefix="homology:")
def _lie_key_index(n: int, k: int) -> dict[Any, int]:
    return {key: i for i, key in enumerate(lie_der_basis_keys(n, k))}


@cached(key_prefix="homology:")
def _spider_index(genus: int, degree: int) -> dict[Spider, int]:
    return {spider: i for i, spider in enumerate(a_basis(genus, degree))}


class GradedAlgebra(ABC):
    """Algebra de Lie graduada g = sum g(k) con base explicita en cada grado."""

    kind: AlgebraKind

    def __init__(self, size: int):
        self.size = size

    @property
    def name(self) -> str:
        return f"{self.kind.value}({AlgebraCapabilities.size_flag(self.kind)}={self.size})"

    @abstractmethod
    def basis(self, degree: int) -> Sequence[Any]:
        """Base de g(degree)."""

    @abstractmethod
    def dimension(self, degree: int) -> int:
        pass

    @abstractmethod
    def ambient_dimension(self, degree: int) -> int:
        """Numero de coordenadas de g(degree) en el sistema de `bracket_coordinates`."""

    @abstractmethod
    def bracket_coordinates(self, left: Any, right: Any) -> Coefficients:
        pass

    def check_range(self, degree: int, mode: Mode, ring: Ring) -> None:
        if not AlgebraCapabilities.supports_ring(self.kind, ring):
            raise AlgebraNoSoportadaException(self.kind.value, f"anillo {ring.value}")
        if degree < 0:
            raise FueraDeRangoException(self.kind.value, self.size, degree, "grado negativo")


class AssocAlgebra(GradedAlgebra):
    """Der(T(H_n)), con la base lexicografica x_l^* (x) palabra."""

    kind = AlgebraKind.ASSOC

    def basis(self, degree: int) -> Sequence[Any]:
        return assoc_basis(self.size, degree)

    def dimension(self, degree: int) -> int:
        return assoc_dimension(self.size, degree)

    def ambient_dimension(self, degree: int) -> int:
        return self.dimension(degree)

    def _index(self, dual: int, word: tuple[int, ...]) -> int:
        index = dual - 1
        for letter in word:
            index = index * self.size + letter - 1
        return index

    def bracket_coordinates(self, left: Any, right: Any) -> Coefficients:
        bracket = bracket_assoc(left, right)
        return {self._index(dual, word): c for (dual, word), c in bracket.terms}


class LieDerAlgebra(GradedAlgebra):
    """Der(L_n), con la base (dual, palabra de Lyndon)."""

    kind = AlgebraKind.LIE

    def check_range(self, degree: int, mode: Mode, ring: Ring) -> None:
        super().check_range(degree, mode, ring)
        if self.size < 2:
            raise FueraDeRangoException(self.kind.value, self.size, degree, "hace falta n >= 2")

    def basis(self, degree: int) -> Sequence[Any]:
        return lie_der_basis(self.size, degree)

    def dimension(self, degree: int) -> int:
        return lie_der_dimension(self.size, degree)

    def ambient_dimension(self, degree: int) -> int:
        return self.dimension(degree)

    def bracket_coordinates(self, left: Any, right: Any) -> Coefficients:
        bracket = bracket_lie_der(left, right)
        index = _lie_key_index(self.size, bracket.degree)
        return {index[key]: c for key, c in bracket.terms}


class SympAlgebra(GradedAlgebra):
    """a_g, con la base de orbitas de aranas.

    Los elementos de la base se toman como aranas (suma completa de rotaciones):
    sobre Q generan lo mismo que las orbitas.
    """

    kind = AlgebraKind.SYMP

    def basis(self, degree: int) -> Sequence[Any]:
        return a_basis(self.size, degree)

    def dimension(self, degree: int) -> int:
        return a_dimension(self.size, degree)

    def ambient_dimension(self, degree: int) -> int:
        return self.dimension(degree)

    def coordinates(self, combination: SpiderCombination) -> Coefficients:
        """Coordenadas de una combinacion homogenea de aranas en la base de orbitas."""
        coordinates = orbit_coordinates(combination)
        if not coordinates:
            return {}
        degree = next(iter(coordinates)).degree
        index = _spider_index(self.size, degree)
        return {index[s]: c for s, c in coordinates.items()}

    def bracket_coordinates(self, left: Any, right: Any) -> Coefficients:
        return self.coordinates(bracket_spider(left, right))


class LieSympAlgebra(GradedAlgebra):
    """h_{g,1}, dentro de Der(L_2g); solo la parte positiva."""

    kind = AlgebraKind.LIE_SYMP

    def check_range(self, degree: int, mode: Mode, ring: Ring) -> None:
        super().check_range(degree, mode, ring)
        if mode == Mode.FULL or degree < 1:
            raise FueraDeRangoException(
                self.kind.value, self.size, degree, "solo se implementa la parte positiva"
            )

    def basis(self, degree: int) -> Sequence[Any]:
        return h_basis(self.size, degree)

    def dimension(self, degree: int) -> int:
        return len(self.basis(degree))

    def ambient_dimension(self, degree: int) -> int:
        return lie_der_dimension(2 * self.size, degree)

    def bracket_coordinates(self, left: Any, right: Any) -> Coefficients:
        bracket = bracket_lie_der(left, right)
        index = _lie_key_index(2 * self.size, bracket.degree)
        return {index[key]: c for key, c in bracket.terms}


_ALGEBRAS: dict[AlgebraKind, type[GradedAlgebra]] = {
    AlgebraKind.ASSOC: AssocAlgebra,
    AlgebraKind.LIE: LieDerAlgebra,
    AlgebraKind.SYMP: SympAlgebra,
    AlgebraKind.LIE_SYMP: LieSympAlgebra,
}


def algebra_for(kind: AlgebraKind | str, size: int) -> GradedAlgebra:
    kind = AlgebraKind(kind)
    if size < 1:
        raise FueraDeRangoException(kind.value, size, 0, "tamaño menor que 1")
    return _ALGEBRAS[kind](size)


@cached(key_prefix="homology:")
def basis_of(kind: str, size: int, degree: int) -> Sequence[Any]:
    """Base de g(k) memorizada por proceso."""
    return tuple(algebra_for(kind, size).basis(degree))
