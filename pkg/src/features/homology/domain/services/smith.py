"""Forma normal de Smith de la matriz de corchetes.

Las columnas se insertan una a una en un reticulo en forma escalonada (combinaciones
unimodulares de dos filas con el algoritmo de Euclides extendido). Las filas con
pivote +-1 se quitan por complemento de Schur. Lo que queda, normalmente pequeño,
se diagonaliza en denso con numpy sobre enteros de Python.
"""

import logging
from math import gcd

import numpy as np

from src.config.settings import settings
from src.features.homology.domain.entities import SnfResult, SpanMatrix, SparseColumn
from src.features.homology.domain.exceptions import MatrizDemasiadoGrandeException

logger = logging.getLogger(__name__)


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(x, y, g) con x a + y b = g."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def _combine(
    u: dict[int, int], v: dict[int, int], coefficients: tuple[int, int, int, int]
) -> tuple[dict[int, int], dict[int, int]]:
    """(u, v) <- (a u + b v, c u + d v)."""
    a, b, c, d = coefficients
    first, second = {}, {}
    for r in u.keys() | v.keys():
        x, y = u.get(r, 0), v.get(r, 0)
        if value := a * x + b * y:
            first[r] = value
        if value := c * x + d * y:
            second[r] = value
    return first, second


def _subtract(vector: dict[int, int], row: dict[int, int], q: int) -> dict[int, int]:
    result = {}
    for r in vector.keys() | row.keys():
        if value := vector.get(r, 0) - q * row.get(r, 0):
            result[r] = value
    return result


class IntegerLattice:
    """Reticulo de Z^rows en forma escalonada: una fila por pivote."""

    def __init__(self, rows: int):
        self.rows = rows
        self.basis: dict[int, dict[int, int]] = {}

    @property
    def rank(self) -> int:
        return len(self.basis)

    def add_vector(self, column: SparseColumn) -> None:
        vector = {r: int(c) for r, c in column.items() if c}
        while vector:
            lead = min(vector)
            row = self.basis.get(lead)
            if row is None:
                self.basis[lead] = vector
                return
            a, b = row[lead], vector[lead]
            if b % a == 0:
                q = b // a
                vector = _subtract(vector, row, q)
                continue
            x, y, g = xgcd(a, b)
            # determinante x (a/g) + y (b/g) = 1
            new_row, vector = _combine(row, vector, (x, y, -b // g, a // g))
            self.basis[lead] = new_row

    def __contains__(self, column: SparseColumn) -> bool:
        vector = {r: int(c) for r, c in column.items() if c}
        while vector:
            lead = min(vector)
            row = self.basis.get(lead)
            if row is None or vector[lead] % row[lead]:
                return False
            q = vector[lead] // row[lead]
            vector = _subtract(vector, row, q)
        return True


def _strip_unit_pivots(basis: dict[int, dict[int, int]]) -> tuple[int, list[dict[int, int]]]:
    """Elimina filas con pivote +-1; cada una aporta un divisor 1."""
    rows = {lead: dict(row) for lead, row in basis.items()}
    stripped = 0
    changed = True
    while changed:
        changed = False
        for lead, row in list(rows.items()):
            unit = next((col for col, value in row.items() if abs(value) == 1), None)
            if unit is None:
                continue
            sign = row[unit]
            del rows[lead]
            for other in rows.values():
                factor = other.get(unit)
                if not factor:
                    continue
                # other <- other - factor * sign * row: limpia la columna `unit`
                for col, value in row.items():
                    updated = other.get(col, 0) - factor * sign * value
                    if updated:
                        other[col] = updated
                    else:
                        other.pop(col, None)
            stripped += 1
            changed = True
    return stripped, [row for row in rows.values() if row]


def dense_smith_divisors(matrix: np.ndarray) -> tuple[int, ...]:
    """Divisores elementales no nulos de una matriz entera densa.

    Limpia alternativamente fila y columna del pivote con pasos de Euclides y al final
    ajusta la diagonal a la cadena de divisibilidad.
    """
    d = matrix.astype(object).copy()
    rows, cols = d.shape

    def move_pivot(i: int) -> bool:
        nonzero = np.argwhere(d[i:, i:] != 0)
        if len(nonzero) == 0:
            return False
        values = [abs(d[i + r, i + c]) for r, c in nonzero]
        r, c = nonzero[int(np.argmin(values))]
        d[[i, i + r]] = d[[i + r, i]]
        d[:, [i, i + c]] = d[:, [i + c, i]]
        return True

    def clear_column(i: int) -> bool:
        dirty = False
        for j in range(i + 1, rows):
            if d[j, i] == 0:
                continue
            x, y, g = xgcd(d[i, i], d[j, i])
            a, b = d[i, i] // g, d[j, i] // g
            d[[i, j]] = np.array([x * d[i] + y * d[j], -b * d[i] + a * d[j]], dtype=object)
            dirty = True
        return dirty

    def clear_row(i: int) -> bool:
        dirty = False
        for j in range(i + 1, cols):
            if d[i, j] == 0:
                continue
            x, y, g = xgcd(d[i, i], d[i, j])
            a, b = d[i, i] // g, d[i, j] // g
            first = x * d[:, i] + y * d[:, j]
            second = -b * d[:, i] + a * d[:, j]
            d[:, i], d[:, j] = first, second
            dirty = True
        return dirty

    for i in range(min(rows, cols)):
        if not move_pivot(i):
            break
        clear_column(i)
        while clear_row(i) and clear_column(i):
            pass

    diagonal = [abs(int(d[i, i])) for i in range(min(rows, cols)) if d[i, i] != 0]
    # (d_i, d_j) -> (gcd, lcm) hasta tener la cadena d1 | d2 | ...
    for i in range(len(diagonal)):
        for j in range(i + 1, len(diagonal)):
            a, b = diagonal[i], diagonal[j]
            g = gcd(a, b)
            diagonal[i], diagonal[j] = g, a * b // g
    return tuple(sorted(diagonal))


def smith_normal_form(matrix: SpanMatrix) -> SnfResult:
    lattice = IntegerLattice(matrix.target_dimension)
    for column in matrix.iter_columns():
        lattice.add_vector(column.entries)
    stripped, rest = _strip_unit_pivots(lattice.basis)
    columns = sorted({col for row in rest for col in row})
    if len(columns) > settings.SNF_MAX_COLUMNS:
        raise MatrizDemasiadoGrandeException(len(rest), len(columns), settings.SNF_MAX_COLUMNS)
    divisors: tuple[int, ...] = ()
    if rest:
        position = {col: i for i, col in enumerate(columns)}
        dense = np.zeros((len(rest), len(columns)), dtype=object)
        for i, row in enumerate(rest):
            for col, value in row.items():
                dense[i, position[col]] = value
        divisors = dense_smith_divisors(dense)
    logger.info(
        f"Smith: rango {lattice.rank}, {stripped} pivotes unidad, resto denso {len(rest)}x"
        f"{len(columns)}"
    )
    return SnfResult(divisors=(1,) * stripped + divisors, rows=matrix.target_dimension)
