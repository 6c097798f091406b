from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass, field
from typing import Any

from src.domain.shared.custom_types import AlgebraKind, Mode, Ring
from src.features.free_algebra.domain.entities import Coefficient, LinearCombination

# Columna dispersa: fila -> coeficiente entero
SparseColumn = dict[int, int]
# (i, j, a, b): particion y posiciones de los dos elementos de la base
ColumnTag = tuple[int, int, int, int]
Partition = tuple[int, int]
# Coordenadas de un corchete, posiblemente racionales
Coefficients = dict[int, Coefficient]


@dataclass(frozen=True)
class SpanColumn:
    tag: ColumnTag
    entries: SparseColumn


@dataclass(frozen=True)
class SpanMatrix:
    """Matriz de corchetes en la base de g(k): una columna por par de elementos de la base.

    Las columnas se generan bajo demanda con `source`, en orden determinista.
    """

    algebra: str
    size: int
    degree: int
    partitions: tuple[Partition, ...]
    target_dimension: int
    column_count: int
    source: Callable[[], Iterator[SpanColumn]] = field(compare=False, repr=False)

    def iter_columns(self) -> Iterator[SpanColumn]:
        return self.source()

    @classmethod
    def from_columns(cls, rows: int, columns: Iterable[SparseColumn]) -> SpanMatrix:
        """Matriz explicita, sin algebra detras (pruebas y oraculos)."""
        stored = tuple(
            SpanColumn((0, 0, index, 0), {r: c for r, c in column.items() if c})
            for index, column in enumerate(columns)
        )
        return cls(
            algebra="explicit",
            size=rows,
            degree=0,
            partitions=(),
            target_dimension=rows,
            column_count=len(stored),
            source=lambda: iter(stored),
        )

    @classmethod
    def from_dense(cls, rows: list[list[int]]) -> SpanMatrix:
        height = len(rows)
        width = len(rows[0]) if rows else 0
        columns = [{r: rows[r][c] for r in range(height) if rows[r][c]} for c in range(width)]
        return cls.from_columns(height, columns)


@dataclass(frozen=True)
class SnfResult:
    """Forma normal de Smith: divisores elementales no nulos d1 | d2 | ... y conucleo."""

    divisors: tuple[int, ...]
    rows: int

    @property
    def rank(self) -> int:
        return len(self.divisors)

    @property
    def free_rank(self) -> int:
        return self.rows - self.rank

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.divisors if d > 1)

    def cokernel_description(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class RankResult:
    """Rango de una matriz; `early_exit` indica que se alcanzo el numero de filas."""

    rank: int
    rows: int
    columns_seen: int
    early_exit: bool = False
    prime: int | None = None
    ranks_by_prime: tuple[tuple[int, int], ...] = ()

    @property
    def corank(self) -> int:
        return self.rows - self.rank


@dataclass(frozen=True)
class H1Result:
    """H1 de peso k de un algebra graduada.

    Sobre Z se da rango libre y torsion, sobre Q o F_p solo la dimension.
    """

    algebra: AlgebraKind
    size: int
    degree: int
    mode: Mode
    ring: Ring
    partitions: tuple[Partition, ...]
    target_dimension: int
    column_count: int
    rank: int
    free_rank: int
    torsion: tuple[int, ...] = ()
    early_exit: bool = False
    ranks_by_prime: tuple[tuple[int, int], ...] = ()
    # Solo en modo full: H1 de la parte positiva en el mismo peso y las dos partes
    # (coinvariantes de H1(g+)_k, H1(g(0))) calculadas por coinvariantes
    plus_free_rank: int | None = None
    coinvariant_part: int | None = None
    degree_zero_part: int | None = None

    @property
    def dimension(self) -> int:
        return self.free_rank

    def description(self) -> str:
        if self.ring == Ring.Z:
            return SnfResult(
                divisors=(1,) * (self.rank - len(self.torsion)) + self.torsion,
                rows=self.target_dimension,
            ).cokernel_description()
        field_name = "Q" if self.ring == Ring.Q else "F_p"
        return f"{field_name}^{self.free_rank}" if self.free_rank else "0"


@dataclass(frozen=True)
class GenerationRow:
    """Rango de los corchetes de un subconjunto de particiones en grado k."""

    degree: int
    partitions: tuple[Partition, ...]
    rank: int
    target_dimension: int
    full_rank: int

    @property
    def spans_image(self) -> bool:
        return self.rank == self.full_rank


@dataclass(frozen=True)
class RepresentationModule:
    """Modulo dado por una base de combinaciones lineales, con relaciones opcionales.

    Las relaciones se cocientan antes de tomar coinvariantes (p. ej. omega_0 en
    el caso de la potencia exterior). `size` es el genero o el rango.
    """

    name: str
    size: int
    basis: tuple[LinearCombination[Any], ...]
    relations: tuple[LinearCombination[Any], ...] = ()

    @property
    def dimension(self) -> int:
        return len(self.basis) - len(self.relations)


@dataclass(frozen=True)
class CoinvariantsResult:
    module: str
    module_dimension: int
    dimension: int


@dataclass(frozen=True)
class ProjectionCheck:
    """Comprobacion de que H1 de peso 2 se factoriza por C13 y el cociente por omega_0."""

    genus: int
    h1_dimension: int
    target_dimension: int
    kills_brackets: bool
    surjective: bool

    @property
    def holds(self) -> bool:
        return (
            self.kills_brackets
            and self.surjective
            and self.h1_dimension == self.target_dimension
        )


@dataclass(frozen=True)
class SpanCacheEntry:
    """Resultado guardado en disco junto con los digest de la base y de las columnas."""

    key: str
    basis_digest: str
    column_digest: str
    result: H1Result
    columns_consumed: int = 0
