from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from typing import Any

from src.features.derivations.domain.entities import LieDerivation
from src.features.free_algebra.domain.entities import LinearCombination, Word
from src.features.symplectic.domain.exceptions import (
    AranaInvalidaException,
    ColorFueraDeRangoException,
    GeneroIncompatibleException,
    GeneroInvalidoException,
    NoEsInvarianteException,
    PermutacionInvalidaException,
)


def color_rank(color: int) -> int:
    """Orden de los colores: 1 < -1 < 2 < -2 < ..."""
    return 2 * color - 1 if color > 0 else -2 * color


def canonical_rotation(colors: tuple[int, ...]) -> tuple[int, ...]:
    """Rotacion lexicograficamente minima segun color_rank."""
    rotations = (colors[i:] + colors[:i] for i in range(len(colors)))
    return min(rotations, key=lambda r: tuple(color_rank(c) for c in r))


def check_colors(colors: Iterable[int], genus: int) -> None:
    for color in colors:
        if color == 0 or abs(color) > genus:
            raise ColorFueraDeRangoException(color, genus)


@dataclass(frozen=True)
class SignedColor:
    """Color con signo: i > 0 es a_i y -i es b_i."""

    value: int
    genus: int

    def __post_init__(self) -> None:
        check_colors((self.value,), self.genus)

    @classmethod
    def from_letter(cls, letter: int, genus: int) -> SignedColor:
        """Inversa de letter: a_i es la letra i y b_i la letra g + i."""
        if not 1 <= letter <= 2 * genus:
            raise ColorFueraDeRangoException(letter, genus)
        return cls(letter if letter <= genus else genus - letter, genus)

    @property
    def is_a(self) -> bool:
        return self.value > 0

    @property
    def index(self) -> int:
        return abs(self.value)

    @property
    def letter(self) -> int:
        return self.value if self.value > 0 else self.genus - self.value

    @property
    def label(self) -> str:
        return f"a{self.index}" if self.is_a else f"b{self.index}"

    def opposite(self) -> SignedColor:
        return SignedColor(-self.value, self.genus)

    def pairing(self, other: SignedColor) -> int:
        """mu(self, other): 1 para (a_i, b_i), -1 para (b_i, a_i), 0 en otro caso."""
        if other.value != -self.value:
            return 0
        return 1 if self.value > 0 else -1


@dataclass(frozen=True)
class SymplecticForm:
    """Forma mu sobre H = <a_1..a_g, b_1..b_g>."""

    genus: int

    def __post_init__(self) -> None:
        if self.genus < 1:
            raise GeneroInvalidoException(self.genus)

    def colors(self) -> list[int]:
        return sorted((c for i in range(1, self.genus + 1) for c in (i, -i)), key=color_rank)

    def pair(self, left: int, right: int) -> int:
        return SignedColor(left, self.genus).pairing(SignedColor(right, self.genus))

    def gram_matrix(self) -> list[list[int]]:
        colors = self.colors()
        return [[self.pair(c, d) for d in colors] for c in colors]


@dataclass(frozen=True, order=True)
class Spider:
    """S(i_1, ..., i_{k+2}): la suma de las k+2 rotaciones de a_i1 (x) ... (x) a_ik+2.

    Se guarda la rotacion canonica, asi la igualdad es la igualdad ciclica. Una
    combinacion lineal de aranas siempre significa suma de estas sumas completas.
    """

    colors: tuple[int, ...]
    genus: int

    def __post_init__(self) -> None:
        colors = tuple(self.colors)
        if len(colors) < 2:
            raise AranaInvalidaException(colors, "necesita al menos dos patas")
        check_colors(colors, self.genus)
        object.__setattr__(self, "colors", canonical_rotation(colors))

    @property
    def degree(self) -> int:
        return len(self.colors) - 2

    @property
    def period(self) -> int:
        """Menor rotacion no trivial que fija la arana."""
        n = len(self.colors)
        for p in range(1, n):
            if n % p == 0 and self.colors[p:] + self.colors[:p] == self.colors:
                return p
        return n

    @property
    def stabilizer_order(self) -> int:
        return len(self.colors) // self.period

    def rotations(self) -> list[Word]:
        """Rotaciones distintas, empezando por la canonica."""
        return [self.colors[i:] + self.colors[:i] for i in range(self.period)]

    def __str__(self) -> str:
        return "S(" + ",".join(str(c) for c in self.colors) + ")"


@dataclass(frozen=True, kw_only=True)
class SympDerivation(LinearCombination[Word]):
    """Elemento de a_g(k): tensor de H^(x)(k+2) sobre colores, invariante por sigma."""

    genus: int
    degree: int

    def __post_init__(self) -> None:
        if self.genus < 1 or self.degree < 0:
            raise GeneroInvalidoException(self.genus, self.degree)
        coefficients = dict(self.terms)
        for word, c in self.terms:
            if len(word) != self.degree + 2:
                raise AranaInvalidaException(word, f"longitud distinta de {self.degree + 2}")
            check_colors(word, self.genus)
            if coefficients.get(word[1:] + word[:1], 0) != c:
                raise NoEsInvarianteException(word)

    def _check_compatible(self, other: LinearCombination[Any]) -> None:
        if isinstance(other, SympDerivation) and other.genus != self.genus:
            raise GeneroIncompatibleException(self.genus, other.genus)

    @classmethod
    def zero(cls, genus: int, degree: int) -> SympDerivation:
        return cls(terms=(), genus=genus, degree=degree)


@dataclass(frozen=True, kw_only=True)
class SympLieDerivation(LieDerivation):
    """Derivacion de L_{2g} que anula omega_0: un elemento de h_{g,1}(k)."""

    def __post_init__(self) -> None:
        if self.rank % 2:
            raise GeneroInvalidoException(self.rank)
        super().__post_init__()

    @property
    def genus(self) -> int:
        return self.rank // 2


@dataclass(frozen=True)
class SignedPermutation:
    """Recoloreo de Sp(2g, Z): a_i -> a_pi(i), o bien a_i -> b_pi(i) y b_i -> -a_pi(i)."""

    genus: int
    images: tuple[int, ...]
    flips: tuple[bool, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(1, self.genus + 1)):
            raise PermutacionInvalidaException(f"{self.images} no permuta 1..{self.genus}")
        if len(self.flips) != self.genus:
            raise PermutacionInvalidaException("hace falta un flip por indice")

    @classmethod
    def identity(cls, genus: int) -> SignedPermutation:
        return cls(genus, tuple(range(1, genus + 1)), (False,) * genus)

    @classmethod
    def extending(
        cls, genus: int, partial: Mapping[int, int], flipped: Iterable[int] = ()
    ) -> SignedPermutation:
        """Completa una asignacion parcial i -> pi(i) con los indices libres en orden."""
        free = iter(sorted(set(range(1, genus + 1)) - set(partial.values())))
        images = tuple(partial[i] if i in partial else next(free) for i in range(1, genus + 1))
        flips = set(flipped)
        return cls(genus, images, tuple(i in flips for i in range(1, genus + 1)))

    def apply(self, color: int) -> tuple[int, int]:
        """Devuelve (signo, color imagen)."""
        index = abs(color)
        target = self.images[index - 1]
        if not self.flips[index - 1]:
            return 1, target if color > 0 else -target
        return (1, -target) if color > 0 else (-1, target)
