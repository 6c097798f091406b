"""Tablas de dimensiones de las piezas graduadas."""

import logging
from math import comb

from src.domain.shared.custom_types import AlgebraKind, Mode, Ring
from src.features.cli.domain.entities import DimensionRow
from src.features.homology.domain.services.graded_algebras import algebra_for
from src.features.symplectic.domain.services.symplectic_lie import trace_image_rank

logger = logging.getLogger(__name__)


def _parts(kind: AlgebraKind, size: int, degree: int) -> dict[str, int]:
    if kind == AlgebraKind.SYMP and degree == 1:
        # a_g(1) = S^3 H + wedge^3 H
        return {"sym3": comb(2 * size + 2, 3), "wedge3": comb(2 * size, 3)}
    if kind == AlgebraKind.LIE_SYMP:
        return {"trace_image_rank": trace_image_rank(size, degree)}
    return {}


def dimension_row(kind: AlgebraKind | str, size: int, degree: int) -> DimensionRow:
    algebra = algebra_for(kind, size)
    ring = Ring.Z if algebra.kind in (AlgebraKind.ASSOC, AlgebraKind.LIE) else Ring.Q
    algebra.check_range(degree, Mode.PLUS, ring)
    row = DimensionRow(
        algebra=algebra.kind.value,
        size=size,
        degree=degree,
        dimension=algebra.dimension(degree),
        parts=_parts(algebra.kind, size, degree),
    )
    logger.info(f"dim {row.algebra}({size})_{degree} = {row.dimension}")
    return row


def dimension_table(kind: AlgebraKind | str, size: int, max_degree: int) -> list[DimensionRow]:
    """Filas para k = 0..max_degree (desde 1 en h_{g,1})."""
    start = 1 if AlgebraKind(kind) == AlgebraKind.LIE_SYMP else 0
    return [dimension_row(kind, size, k) for k in range(start, max_degree + 1)]
