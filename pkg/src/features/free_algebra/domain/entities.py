from __future__ import annotations

import dataclasses
from collections import defaultdict
from collections.abc import Callable, Iterable, Iterator, Mapping
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from operator import itemgetter
from typing import Any, Generic, TypeVar, Union

from src.features.free_algebra.domain.exceptions import (
    LetraFueraDeRangoException,
    PalabraInvalidaException,
    RangoIncompatibleException,
)

# Coeficientes exactos: enteros por defecto, racionales cuando hace falta dividir
Coefficient = Union[int, Fraction]

# Una palabra es una tupla de letras enteras 1..n (o colores con signo en el caso simplectico)
Word = tuple[int, ...]

K = TypeVar("K")
LC = TypeVar("LC", bound="LinearCombination[Any]")


def normalize_coefficient(value: Coefficient) -> Coefficient:
    """Baja un Fraction entero a int para mantener una sola forma canonica."""
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value.numerator)
    return value


def canonical_terms(mapping: Mapping[K, Coefficient]) -> tuple[tuple[K, Coefficient], ...]:
    """Lista asociativa ordenada por clave y sin ceros."""
    return tuple(
        sorted(
            ((key, normalize_coefficient(c)) for key, c in mapping.items() if c != 0),
            key=itemgetter(0),
        )
    )


@dataclass(frozen=True)
class LinearCombination(Generic[K]):
    """Combinacion lineal dispersa y exacta sobre claves ordenables.

    Es el vehiculo comun de tensores, elementos de Lie y derivaciones. Los terminos
    se guardan ordenados y sin coeficientes nulos, asi dos combinaciones iguales son
    iguales como tuplas y el orden de iteracion es reproducible.
    """

    terms: tuple[tuple[K, Coefficient], ...] = ()

    @classmethod
    def from_mapping(cls: type[LC], mapping: Mapping[Any, Coefficient], **fields: Any) -> LC:
        return cls(terms=canonical_terms(mapping), **fields)

    @classmethod
    def from_pairs(
        cls: type[LC], pairs: Iterable[tuple[Any, Coefficient]], **fields: Any
    ) -> LC:
        acc: dict[Any, Coefficient] = defaultdict(int)
        for key, c in pairs:
            acc[key] += c
        return cls.from_mapping(acc, **fields)

    def _rebuild(self: LC, mapping: Mapping[Any, Coefficient]) -> LC:
        return dataclasses.replace(self, terms=canonical_terms(mapping))

    def _check_compatible(self, other: LinearCombination[Any]) -> None:
        """Gancho para que las subclases validen rango o grado."""

    # Acceso

    def as_dict(self) -> dict[K, Coefficient]:
        return dict(self.terms)

    def coefficient(self, key: K) -> Coefficient:
        for k, c in self.terms:
            if k == key:
                return c
        return 0

    def support(self) -> tuple[K, ...]:
        return tuple(k for k, _ in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[K, Coefficient]]:
        return iter(self.terms)

    # Aritmetica

    def __add__(self: LC, other: LC) -> LC:
        self._check_compatible(other)
        acc: dict[Any, Coefficient] = dict(self.terms)
        for key, c in other.terms:
            acc[key] = acc.get(key, 0) + c
        return self._rebuild(acc)

    def __sub__(self: LC, other: LC) -> LC:
        self._check_compatible(other)
        acc: dict[Any, Coefficient] = dict(self.terms)
        for key, c in other.terms:
            acc[key] = acc.get(key, 0) - c
        return self._rebuild(acc)

    def __neg__(self: LC) -> LC:
        return dataclasses.replace(self, terms=tuple((k, -c) for k, c in self.terms))

    def scale(self: LC, factor: Coefficient) -> LC:
        if factor == 0:
            return self._rebuild({})
        return dataclasses.replace(
            self, terms=tuple((k, normalize_coefficient(c * factor)) for k, c in self.terms)
        )

    def __mul__(self: LC, factor: Coefficient) -> LC:
        return self.scale(factor)

    __rmul__ = __mul__

    def map_keys(self: LC, func: Callable[[K], Any]) -> LC:
        """Reindexa las claves sumando las que colisionan."""
        extra = {f.name: getattr(self, f.name) for f in dataclasses.fields(self)}
        extra.pop("terms")
        return self.from_pairs(((func(k), c) for k, c in self.terms), **extra)

    def scale_to_integers(self: LC) -> tuple[LC, int]:
        """Multiplica por el mcm de los denominadores. Devuelve (combinacion, mcm)."""
        denominator = 1
        for _, c in self.terms:
            if isinstance(c, Fraction):
                denominator = lcm(denominator, c.denominator)
        if denominator == 1:
            return self, 1
        return self.scale(denominator), denominator


@dataclass(frozen=True)
class TensorElement(LinearCombination[Word]):
    """Elemento de T(H) sin termino constante: combinacion de palabras no vacias."""

    def __post_init__(self) -> None:
        for word, _ in self.terms:
            if len(word) == 0:
                raise PalabraInvalidaException(word)

    @classmethod
    def word(cls, *letters: int, coefficient: Coefficient = 1) -> TensorElement:
        return cls.from_mapping({tuple(letters): coefficient})

    @property
    def degree(self) -> int | None:
        """Grado comun de todas las palabras, o None si no es homogeneo o es cero."""
        lengths = {len(w) for w, _ in self.terms}
        return lengths.pop() if len(lengths) == 1 else None

    def is_homogeneous(self) -> bool:
        return self.is_zero() or self.degree is not None


@dataclass(frozen=True)
class LyndonWord:
    """Palabra de Lyndon con su factorizacion estandar (u, v).

    v es el sufijo propio de Lyndon mas largo. Para letras sueltas no hay factorizacion.
    """

    letters: Word
    factorization: tuple[Word, Word] | None = None

    def __len__(self) -> int:
        return len(self.letters)

    def __lt__(self, other: LyndonWord) -> bool:
        return self.letters < other.letters


@dataclass(frozen=True, kw_only=True)
class LieElement(LinearCombination[Word]):
    """Elemento de L_n escrito en la base de Lyndon (las claves son palabras de Lyndon)."""

    rank: int

    def __post_init__(self) -> None:
        for word, _ in self.terms:
            if not word:
                raise PalabraInvalidaException(word)
            for letter in word:
                if not 1 <= letter <= self.rank:
                    raise LetraFueraDeRangoException(letter, self.rank)

    def _check_compatible(self, other: LinearCombination[Any]) -> None:
        if isinstance(other, LieElement) and other.rank != self.rank:
            raise RangoIncompatibleException(self.rank, other.rank)

    @classmethod
    def generator(cls, index: int, rank: int) -> LieElement:
        return cls.from_mapping({(index,): 1}, rank=rank)

    @classmethod
    def zero(cls, rank: int) -> LieElement:
        return cls(terms=(), rank=rank)

    @property
    def degree(self) -> int | None:
        lengths = {len(w) for w, _ in self.terms}
        return lengths.pop() if len(lengths) == 1 else None
