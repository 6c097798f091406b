from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from typing import Any

from src.features.derivations.domain.exceptions import (
    DerivacionMalFormadaException,
    GradoIncompatibleException,
)
from src.features.free_algebra.domain.entities import LinearCombination, Word
from src.features.free_algebra.domain.exceptions import RangoIncompatibleException

# Clave de la base de Hom(H, H^(x)(k+1)): (indice dual l, palabra) = x_l^* (x) palabra
DerivationKey = tuple[int, Word]


@dataclass(frozen=True, kw_only=True)
class GradedDerivation(LinearCombination[DerivationKey]):
    rank: int
    degree: int

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise DerivacionMalFormadaException(f"grado negativo {self.degree}")
        for (dual, word), _ in self.terms:
            if not 1 <= dual <= self.rank:
                raise DerivacionMalFormadaException(f"indice dual {dual} fuera de 1..{self.rank}")
            if len(word) != self.degree + 1:
                raise DerivacionMalFormadaException(
                    f"la palabra {word} no tiene longitud {self.degree + 1}"
                )
            if any(not 1 <= letter <= self.rank for letter in word):
                raise DerivacionMalFormadaException(f"letra fuera de rango en {word}")

    def _check_compatible(self, other: LinearCombination[Any]) -> None:
        if isinstance(other, GradedDerivation):
            if other.rank != self.rank:
                raise RangoIncompatibleException(self.rank, other.rank)
            if other.degree != self.degree:
                raise GradoIncompatibleException(self.degree, other.degree)

    def images(self) -> dict[int, list[tuple[Word, Any]]]:
        """Imagen de cada generador: dual -> [(palabra, coeficiente)]."""
        result: dict[int, list[tuple[Word, Any]]] = {}
        for (dual, word), c in self.terms:
            result.setdefault(dual, []).append((word, c))
        return result


@dataclass(frozen=True, kw_only=True)
class AssocDerivation(GradedDerivation):
    """Derivacion de grado k de T(H_n): elemento de H_n^* (x) H_n^(x)(k+1)."""

    @classmethod
    def zero(cls, rank: int, degree: int) -> AssocDerivation:
        return cls(terms=(), rank=rank, degree=degree)

    @classmethod
    def basis_element(cls, dual: int, word: Iterable[int], rank: int) -> AssocDerivation:
        word = tuple(word)
        return cls.from_mapping({(dual, word): 1}, rank=rank, degree=len(word) - 1)


@dataclass(frozen=True, kw_only=True)
class LieDerivation(GradedDerivation):
    """Derivacion de grado k de L_n: elemento de H_n^* (x) L_n(k+1) en la base de Lyndon."""

    @classmethod
    def zero(cls, rank: int, degree: int) -> LieDerivation:
        return cls(terms=(), rank=rank, degree=degree)


@dataclass(frozen=True)
class BracketRewriting:
    """Igualdad target = sum c [F, G] + sum c D, lista para auditar.

    Los terminos de correccion no tienen por que ser corchetes: son los generadores
    que quedan por reescribir (o la seccion s en grado 2).
    """

    name: str
    target: GradedDerivation
    brackets: tuple[tuple[int, GradedDerivation, GradedDerivation], ...]
    corrections: tuple[tuple[int, GradedDerivation], ...] = ()


@dataclass(frozen=True, order=True)
class SymmetricMonomial:
    """Monomio de S^k H_n: multiconjunto de indices, guardado ordenado."""

    letters: tuple[int, ...]

    @classmethod
    def of(cls, letters: Iterable[int]) -> SymmetricMonomial:
        return cls(tuple(sorted(letters)))

    @property
    def size(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return "".join(f"x{i}" for i in self.letters)
