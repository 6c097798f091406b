"""Rango por eliminacion en flujo: modulo p y exacta sin fracciones.

Los eliminadores guardan una fila reducida por pivote y consumen columnas una a
una; ninguna matriz completa se materializa. En F_p el pivote de cada vector es
su primera coordenada no nula libre; la eliminacion entera elige la coordenada
con menos apariciones en las filas guardadas.
"""

import logging
from collections.abc import Iterable, Sequence
from math import gcd

from sympy import isprime

from src.config.settings import settings
from src.features.homology.domain.entities import RankResult, SpanMatrix, SparseColumn
from src.features.homology.domain.exceptions import (
    PrimoInvalidoException,
    PrimosDiscordantesException,
)

logger = logging.getLogger(__name__)


class ModPEliminator:
    """Base escalonada de un subespacio de F_p^rows."""

    def __init__(self, rows: int, prime: int):
        if not isprime(prime):
            raise PrimoInvalidoException(prime)
        self.rows = rows
        self.prime = prime
        # pivote -> vector con coeficiente 1 en el pivote
        self.pivots: dict[int, dict[int, int]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def is_full(self) -> bool:
        return self.rank == self.rows

    def reduce(self, column: SparseColumn) -> dict[int, int]:
        p = self.prime
        vector = {r: c % p for r, c in column.items() if c % p}
        while vector:
            lead = min(vector)
            row = self.pivots.get(lead)
            if row is None:
                return vector
            factor = vector[lead]
            for r, c in row.items():
                value = (vector.get(r, 0) - factor * c) % p
                if value:
                    vector[r] = value
                else:
                    vector.pop(r, None)
        return vector

    def add(self, column: SparseColumn) -> bool:
        """Agrega la columna; devuelve True si aumenta el rango."""
        vector = self.reduce(column)
        if not vector:
            return False
        lead = min(vector)
        inverse = pow(vector[lead], -1, self.prime)
        self.pivots[lead] = {r: c * inverse % self.prime for r, c in vector.items()}
        return True


class FractionFreeEliminator:
    """Base escalonada entera de un subespacio de Q^rows.

    Cada vector entrante se reduce con v <- a v - b r (a el pivote de r) y se divide
    por su contenido, asi los coeficientes siguen siendo enteros. La reduccion quita
    todas las coordenadas pivote, de la mas antigua a la mas nueva; el pivote de una
    fila nueva es la coordenada que aparece en menos filas guardadas (desempate por
    menor |coeficiente| y luego por indice).
    """

    def __init__(self, rows: int):
        self.rows = rows
        self.pivots: dict[int, dict[int, int]] = {}
        # pivote -> orden de insercion
        self.order: dict[int, int] = {}
        # coordenada -> filas guardadas que la contienen
        self.counts: dict[int, int] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def is_full(self) -> bool:
        return self.rank == self.rows

    def _eliminate(self, vector: dict[int, int], lead: int) -> dict[int, int]:
        row = self.pivots[lead]
        a, b = row[lead], vector[lead]
        g = gcd(a, b)
        a, b = a // g, b // g
        merged = {}
        for r in vector.keys() | row.keys():
            value = a * vector.get(r, 0) - b * row.get(r, 0)
            if value:
                merged[r] = value
        content = 0
        for value in merged.values():
            content = gcd(content, value)
        return {r: c // content for r, c in merged.items()} if content > 1 else merged

    def reduce(self, column: SparseColumn) -> dict[int, int]:
        vector = {r: int(c) for r, c in column.items() if c}
        while present := [r for r in vector if r in self.pivots]:
            vector = self._eliminate(vector, min(present, key=self.order.__getitem__))
        return vector

    def choose_pivot(self, vector: dict[int, int]) -> int:
        return min(vector, key=lambda r: (self.counts.get(r, 0), abs(vector[r]), r))

    def add(self, column: SparseColumn) -> bool:
        vector = self.reduce(column)
        if not vector:
            return False
        lead = self.choose_pivot(vector)
        self.order[lead] = len(self.order)
        self.pivots[lead] = vector
        for r in vector:
            self.counts[r] = self.counts.get(r, 0) + 1
        return True


def _columns(matrix: SpanMatrix) -> Iterable[SparseColumn]:
    for column in matrix.iter_columns():
        yield column.entries


def rank_mod_p(matrix: SpanMatrix, prime: int) -> RankResult:
    """Rango sobre F_p con salida temprana al llenar las filas."""
    eliminator = ModPEliminator(matrix.target_dimension, prime)
    seen = 0
    for column in _columns(matrix):
        seen += 1
        eliminator.add(column)
        if eliminator.is_full:
            break
    early = eliminator.is_full and seen < matrix.column_count
    return RankResult(
        rank=eliminator.rank,
        rows=matrix.target_dimension,
        columns_seen=seen,
        early_exit=early,
        prime=prime,
        ranks_by_prime=((prime, eliminator.rank),),
    )


def rank_multi_prime(matrix: SpanMatrix, primes: Sequence[int] | None = None) -> RankResult:
    """Rango en varios primos a la vez, en una sola pasada por las columnas.

    Si los rangos no coinciden se aborta con un diagnostico.
    """
    primes = list(primes or settings.PRIMES)
    eliminators = [ModPEliminator(matrix.target_dimension, p) for p in primes]
    seen = 0
    for column in _columns(matrix):
        seen += 1
        for eliminator in eliminators:
            if not eliminator.is_full:
                eliminator.add(column)
        if all(e.is_full for e in eliminators):
            break
        if seen % 100_000 == 0:
            logger.info(f"{seen}/{matrix.column_count} columnas, rango {eliminators[0].rank}")
    ranks = {e.prime: e.rank for e in eliminators}
    if len(set(ranks.values())) > 1:
        logger.warning(f"Rangos modulares discordantes: {ranks}")
        raise PrimosDiscordantesException(ranks)
    rank = eliminators[0].rank
    early = rank == matrix.target_dimension and seen < matrix.column_count
    if early:
        logger.info(f"Salida temprana: rango completo {rank} tras {seen} columnas")
    return RankResult(
        rank=rank,
        rows=matrix.target_dimension,
        columns_seen=seen,
        early_exit=early,
        ranks_by_prime=tuple(ranks.items()),
    )


def exact_rank(matrix: SpanMatrix) -> RankResult:
    """Rango sobre Q por eliminacion entera sin fracciones."""
    eliminator = FractionFreeEliminator(matrix.target_dimension)
    seen = 0
    for column in _columns(matrix):
        seen += 1
        eliminator.add(column)
        if eliminator.is_full:
            break
    return RankResult(
        rank=eliminator.rank,
        rows=matrix.target_dimension,
        columns_seen=seen,
        early_exit=eliminator.is_full and seen < matrix.column_count,
    )


def exact_rank_of(rows: int, columns: Iterable[SparseColumn]) -> int:
    eliminator = FractionFreeEliminator(rows)
    for column in columns:
        eliminator.add(column)
    return eliminator.rank


def membership(vector: SparseColumn, matrix: SpanMatrix, exact: bool = True) -> bool:
    """Decide si el vector esta en el span de las columnas (sobre Q o en los primos)."""
    if exact:
        eliminator = FractionFreeEliminator(matrix.target_dimension)
        for column in _columns(matrix):
            eliminator.add(column)
            if eliminator.is_full:
                return True
        return not eliminator.reduce(vector)
    answers = []
    for prime in settings.PRIMES:
        modular = ModPEliminator(matrix.target_dimension, prime)
        for column in _columns(matrix):
            modular.add(column)
            if modular.is_full:
                break
        answers.append(not modular.reduce(vector))
    if len(set(answers)) > 1:
        raise PrimosDiscordantesException(
            {p: int(a) for p, a in zip(settings.PRIMES, answers)}
        )
    return answers[0]
