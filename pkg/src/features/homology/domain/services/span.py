"""Columnas de sum_{i+j=k} [g(i), g(j)] en la base de g(k).

Las particiones son no ordenadas. Para i = j solo se toman los pares a < b.
Las columnas se producen por bloques de filas de la base de g(i); con varios
procesos cada bloque lo calcula un trabajador sin estado y el orden de salida
es siempre el mismo.
"""

import logging
from collections.abc import Iterator, Sequence
from concurrent.futures import Future, ProcessPoolExecutor
from fractions import Fraction
from math import lcm

from src.config.settings import settings
from src.domain.shared.custom_types import AlgebraKind, Mode
from src.features.homology.domain.entities import (
    Coefficients,
    Partition,
    SpanColumn,
    SpanMatrix,
    SparseColumn,
)
from src.features.homology.domain.exceptions import FueraDeRangoException
from src.features.homology.domain.services.graded_algebras import (
    GradedAlgebra,
    algebra_for,
    basis_of,
)

logger = logging.getLogger(__name__)


def default_partitions(degree: int, mode: Mode) -> tuple[Partition, ...]:
    """(i, j) con i <= j e i + j = k; en modo full tambien (0, k)."""
    first = 0 if mode == Mode.FULL else 1
    return tuple((i, degree - i) for i in range(first, degree // 2 + 1) if i <= degree - i)


def integral_column(coordinates: Coefficients) -> SparseColumn:
    """Quita denominadores; el multiplo no cambia el rango."""
    denominators = [c.denominator for c in coordinates.values() if isinstance(c, Fraction)]
    factor = lcm(*denominators) if denominators else 1
    return {r: int(c * factor) for r, c in sorted(coordinates.items()) if c}


def partition_column_count(algebra: GradedAlgebra, partition: Partition) -> int:
    i, j = partition
    if i == j:
        d = algebra.dimension(i)
        return d * (d - 1) // 2
    return algebra.dimension(i) * algebra.dimension(j)


def _partition_block(
    kind: str, size: int, partition: Partition, start: int, stop: int
) -> list[SpanColumn]:
    """Columnas de los elementos a en [start, stop) de g(i) contra g(j)."""
    algebra = algebra_for(AlgebraKind(kind), size)
    i, j = partition
    left_basis = basis_of(kind, size, i)
    right_basis = basis_of(kind, size, j)
    columns = []
    for a in range(start, stop):
        first = a + 1 if i == j else 0
        for b in range(first, len(right_basis)):
            entries = integral_column(algebra.bracket_coordinates(left_basis[a], right_basis[b]))
            if entries:
                columns.append(SpanColumn((i, j, a, b), entries))
    return columns


def _blocks(algebra: GradedAlgebra, partitions: Sequence[Partition], chunk: int):
    for partition in partitions:
        rows = algebra.dimension(partition[0])
        for start in range(0, rows, chunk):
            yield partition, start, min(start + chunk, rows)


def _iter_sequential(
    algebra: GradedAlgebra, partitions: Sequence[Partition], chunk: int
) -> Iterator[SpanColumn]:
    for partition, start, stop in _blocks(algebra, partitions, chunk):
        yield from _partition_block(algebra.kind.value, algebra.size, partition, start, stop)


def _iter_parallel(
    algebra: GradedAlgebra, partitions: Sequence[Partition], chunk: int, workers: int
) -> Iterator[SpanColumn]:
    # Ventana acotada de bloques en vuelo
    window = 2 * workers
    blocks = iter(_blocks(algebra, partitions, chunk))
    with ProcessPoolExecutor(max_workers=workers) as executor:
        pending: list[Future[list[SpanColumn]]] = []
        for partition, start, stop in blocks:
            pending.append(
                executor.submit(
                    _partition_block, algebra.kind.value, algebra.size, partition, start, stop
                )
            )
            if len(pending) >= window:
                yield from pending.pop(0).result()
        for future in pending:
            yield from future.result()


def bracket_span(
    algebra: GradedAlgebra,
    degree: int,
    partitions: Sequence[Partition],
    workers: int = 1,
) -> SpanMatrix:
    """Matriz de corchetes de g(k) para las particiones dadas (normalizadas i <= j)."""
    normalized = tuple(sorted({(min(p), max(p)) for p in partitions}))
    for i, j in normalized:
        if i + j != degree or i < 0:
            raise FueraDeRangoException(
                algebra.kind.value, algebra.size, degree, f"particion ({i},{j}) no suma {degree}"
            )
    target = algebra.dimension(degree)
    if target > settings.MAX_TARGET_DIMENSION:
        raise FueraDeRangoException(
            algebra.kind.value,
            algebra.size,
            degree,
            f"dim g(k) = {target} supera {settings.MAX_TARGET_DIMENSION}",
        )
    column_count = sum(partition_column_count(algebra, p) for p in normalized)
    widest = max((algebra.dimension(j) for _, j in normalized), default=1)
    chunk = max(1, settings.COLUMN_CHUNK_SIZE // max(1, widest))
    logger.info(
        f"Span de {algebra.name} en k={degree}: particiones {list(normalized)}, "
        f"{column_count} columnas, dim {target}"
    )

    def source() -> Iterator[SpanColumn]:
        if workers > 1:
            return _iter_parallel(algebra, normalized, chunk, workers)
        return _iter_sequential(algebra, normalized, chunk)

    return SpanMatrix(
        algebra=algebra.kind.value,
        size=algebra.size,
        degree=degree,
        partitions=normalized,
        target_dimension=target,
        column_count=column_count,
        source=source,
    )
