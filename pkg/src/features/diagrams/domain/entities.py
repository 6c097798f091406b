from __future__ import annotations

import enum
from dataclasses import dataclass, field

from src.features.diagrams.domain.exceptions import ConfiguracionInvalidaException
from src.features.free_algebra.domain.entities import Coefficient, LinearCombination
from src.features.symplectic.domain.entities import Spider


class VertexClass(str, enum.Enum):
    UNPAIRED = "unpaired"
    SINGLE_PAIRED = "single_paired"
    MULTIPLE_PAIRED = "multiple_paired"


class SlideCase(str, enum.Enum):
    """Forma del par de vertices adyacentes (i, j) en un deslizamiento."""

    NESTED = "nested"  # S(X, i, j, Y, -j, Z, -i)
    CROSSED = "crossed"  # S(X, i, j, Y, -i, Z, -j)
    UNPAIRED = "unpaired"  # S(X, i, j, Y, -i), j sin pareja


class CertificationRoute(str, enum.Enum):
    CYCLING = "cycling"
    MIRROR = "mirror"
    PARITY = "parity"


@dataclass(frozen=True)
class ChordDiagram:
    """Diagrama de cuerdas de una arana: vertices en el orden canonico y una cuerda
    entre cada par de vertices con colores opuestos."""

    spider: Spider
    chords: tuple[tuple[int, int], ...]

    @property
    def colors(self) -> tuple[int, ...]:
        return self.spider.colors

    @property
    def genus(self) -> int:
        return self.spider.genus

    def __len__(self) -> int:
        return len(self.spider.colors)

    def partners(self, position: int) -> list[int]:
        return [q if p == position else p for p, q in self.chords if position in (p, q)]

    def chorded_vertices(self) -> set[int]:
        return {p for chord in self.chords for p in chord}


@dataclass(frozen=True)
class BracketTerm:
    """Un sumando coefficient * [left, right] de un certificado."""

    left: Spider
    right: Spider
    coefficient: Coefficient


@dataclass(frozen=True)
class ReductionCertificate:
    """Identidad S = sum c [L, R] + sum c' T, auditable por expansion tensorial.

    `max_backtracks` es el mayor numero de pasos III-c a lo largo de una misma rama
    y `max_multiplicity` la mayor multiplicidad vista en la traza.
    """

    spider: Spider
    brackets: tuple[BracketTerm, ...] = ()
    remainder: tuple[tuple[Spider, Coefficient], ...] = ()
    fresh_colors: tuple[int, ...] = ()
    steps: int = 0
    max_backtracks: int = 0
    max_multiplicity: int = 0

    @property
    def genus(self) -> int:
        return self.spider.genus

    @property
    def degree(self) -> int:
        return self.spider.degree

    def remainder_combination(self) -> LinearCombination[Spider]:
        return LinearCombination.from_pairs(self.remainder)

    def is_in_bracket_image(self) -> bool:
        return not self.remainder


@dataclass(frozen=True)
class ConfigurationState:
    """Configuracion F_l: S(c1, c2, -c1, c3, -c2, ..., c_l, -c_{l-1}, X, -c_l, Y).

    `offset` es la posicion de c1 en la rotacion canonica de la arana.
    """

    chain: tuple[int, ...]
    inner: tuple[int, ...]
    outer: tuple[int, ...]
    offset: int = 0
    multiplicity: int = 0

    def __post_init__(self) -> None:
        if not self.chain:
            raise ConfiguracionInvalidaException(self.chain, "cadena vacia")
        indices = [abs(c) for c in self.chain]
        if len(set(indices)) != len(indices):
            raise ConfiguracionInvalidaException(self.chain, "colores repetidos en la cadena")
        if any(abs(c) in indices for c in self.inner + self.outer):
            raise ConfiguracionInvalidaException(self.chain, "X o Y usan un color de la cadena")

    @property
    def level(self) -> int:
        return len(self.chain)

    @property
    def prefix(self) -> tuple[int, ...]:
        """c1, c2, -c1, ..., c_l, -c_{l-1}."""
        colors = [self.chain[0]]
        for previous, current in zip(self.chain, self.chain[1:]):
            colors += [current, -previous]
        return tuple(colors)

    @property
    def colors(self) -> tuple[int, ...]:
        return self.prefix + self.inner + (-self.chain[-1],) + self.outer

    def inner_start(self) -> int:
        """Posicion del primer vertice de X en la rotacion que empieza en c1."""
        return len(self.prefix)

    def outer_start(self) -> int:
        return len(self.prefix) + len(self.inner) + 1


@dataclass
class CertificationReport:
    """Resultado de certificar una arana en la imagen del corchete."""

    certificate: ReductionCertificate
    route: CertificationRoute
    residue: int
    cycled: list[Spider] = field(default_factory=list)
    # None mientras no se compruebe por rango la pertenencia de los restos
    in_bracket_image: bool | None = None
    # resto en forma estandar -> (signo, recoloreo con c_i = i)
    normal_forms: dict[Spider, tuple[int, Spider]] = field(default_factory=dict)
