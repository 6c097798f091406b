"""Digest de configuraciones, bases y flujos de columnas para la cache en disco."""

import hashlib
import json
from collections import deque
from collections.abc import Iterator, Sequence
from dataclasses import replace
from itertools import islice

from src.config.settings import settings
from src.domain.shared.custom_types import Mode, Ring
from src.features.homology.domain.entities import Partition, SpanColumn, SpanMatrix
from src.features.homology.domain.services.graded_algebras import GradedAlgebra, basis_of


def cache_key(
    algebra: GradedAlgebra,
    degree: int,
    mode: Mode,
    ring: Ring,
    partitions: Sequence[Partition],
    primes: Sequence[int] | None = None,
) -> str:
    """sha256 de la configuracion en JSON canonico."""
    config = {
        "schema": settings.SCHEMA_VERSION,
        "algebra": algebra.kind.value,
        "size": algebra.size,
        "degree": degree,
        "mode": mode.value,
        "ring": ring.value,
        "partitions": sorted([min(p), max(p)] for p in partitions),
        "primes": sorted(primes or settings.PRIMES) if ring == Ring.MODP else [],
    }
    canonical = json.dumps(config, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode()).hexdigest()


def basis_digest(algebra: GradedAlgebra, degree: int, partitions: Sequence[Partition]) -> str:
    """Digest de las bases de todos los grados que intervienen."""
    degrees = sorted({degree, *(d for p in partitions for d in p)})
    hasher = hashlib.sha256()
    for d in degrees:
        hasher.update(f"{d}:".encode())
        for element in basis_of(algebra.kind.value, algebra.size, d):
            hasher.update(repr(element).encode())
    return hasher.hexdigest()


class ColumnDigest:
    """Acumula el digest de las columnas que efectivamente se consumen."""

    def __init__(self) -> None:
        self._hasher = hashlib.sha256()
        self.columns = 0

    def wrap(self, matrix: SpanMatrix) -> SpanMatrix:
        def source() -> Iterator[SpanColumn]:
            for column in matrix.iter_columns():
                self._hasher.update(repr((column.tag, sorted(column.entries.items()))).encode())
                self.columns += 1
                yield column

        return replace(matrix, source=source)

    def hexdigest(self) -> str:
        return self._hasher.hexdigest()


def column_digest_of(matrix: SpanMatrix, count: int) -> str:
    """Digest de las primeras `count` columnas, el mismo que acumula ColumnDigest."""
    digest = ColumnDigest()
    deque(islice(digest.wrap(matrix).iter_columns(), count), maxlen=0)
    return digest.hexdigest()
