"""H1 de peso k: el cociente de g(k) por sum_{i+j=k} [g(i), g(j)]."""

import logging
from collections.abc import Sequence
from math import comb

from src.config.settings import settings
from src.domain.shared.custom_types import AlgebraKind, Mode, Ring
from src.domain.shared.validators.common import validate_partitions
from src.features.derivations.domain.services.associative import contraction_c13
from src.features.free_algebra.domain.entities import TensorElement
from src.features.homology.domain.entities import (
    GenerationRow,
    H1Result,
    Partition,
    ProjectionCheck,
    SpanMatrix,
)
from src.features.homology.domain.exceptions import (
    CorridaPesadaException,
    EnsambladoDiscordanteException,
    FueraDeRangoException,
)
from src.features.homology.domain.services.coinvariants import full_mode_parts, omega0_letters
from src.features.homology.domain.services.digests import ColumnDigest
from src.features.homology.domain.services.elimination import (
    FractionFreeEliminator,
    exact_rank,
    membership,
    rank_multi_prime,
)
from src.features.homology.domain.services.graded_algebras import SympAlgebra, algebra_for
from src.features.homology.domain.services.smith import smith_normal_form
from src.features.homology.domain.services.span import (
    bracket_span,
    default_partitions,
    integral_column,
)
from src.features.symplectic.domain.entities import SympDerivation
from src.features.symplectic.domain.services.spiders import (
    a_basis,
    bracket_spider,
    combination_to_tensor,
    spider_to_tensor,
    symp_to_derivation,
    tensor_to_symp,
)

logger = logging.getLogger(__name__)


def _check_heavy(matrix: SpanMatrix, heavy: bool) -> None:
    if matrix.column_count > settings.HEAVY_COLUMN_THRESHOLD and not heavy:
        logger.warning(f"Corrida pesada rechazada: {matrix.column_count} columnas")
        raise CorridaPesadaException(matrix.column_count, settings.HEAVY_COLUMN_THRESHOLD)


def _normalize_partitions(
    partitions: Sequence[Partition] | None, degree: int, mode: Mode, algebra: str, size: int
) -> tuple[Partition, ...]:
    if partitions is None:
        return default_partitions(degree, mode)
    try:
        return tuple(validate_partitions(partitions, degree, allow_zero=mode == Mode.FULL))
    except ValueError as e:
        raise FueraDeRangoException(algebra, size, degree, str(e)) from e


def h1_weight(
    kind: AlgebraKind,
    size: int,
    degree: int,
    mode: Mode = Mode.PLUS,
    ring: Ring = Ring.Z,
    partitions: Sequence[Partition] | None = None,
    primes: Sequence[int] | None = None,
    workers: int = 1,
    heavy: bool = False,
    column_digest: ColumnDigest | None = None,
) -> H1Result:
    """H1 de peso k. En modo full tambien se calcula la parte positiva del mismo peso.

    En modo full las dos partes (coinvariantes de H1(g+)_k y H1(g(0))) se calculan
    aparte como coinvariantes de g(k) y su suma debe dar el rango directo.
    Con `column_digest` se acumula el digest de las columnas consumidas.
    """
    algebra = algebra_for(kind, size)
    algebra.check_range(degree, mode, ring)
    chosen = _normalize_partitions(partitions, degree, mode, algebra.kind.value, size)
    matrix = bracket_span(algebra, degree, chosen, workers=workers)
    _check_heavy(matrix, heavy)
    if column_digest is not None:
        matrix = column_digest.wrap(matrix)

    torsion: tuple[int, ...] = ()
    early_exit = False
    ranks_by_prime: tuple[tuple[int, int], ...] = ()
    if ring == Ring.Z:
        snf = smith_normal_form(matrix)
        rank, torsion = snf.rank, snf.torsion
    elif ring == Ring.Q:
        result = exact_rank(matrix)
        rank, early_exit = result.rank, result.early_exit
    else:
        result = rank_multi_prime(matrix, primes)
        rank, early_exit, ranks_by_prime = result.rank, result.early_exit, result.ranks_by_prime

    plus_free_rank: int | None = None
    coinvariant_part: int | None = None
    degree_zero_part: int | None = None
    if mode == Mode.FULL:
        if degree >= 1:
            plus = h1_weight(
                kind, size, degree, Mode.PLUS, ring, primes=primes, workers=workers, heavy=heavy
            )
            plus_free_rank = plus.free_rank
        parts = full_mode_parts(kind, size, degree, chosen)
        coinvariant_part, degree_zero_part = parts
        assembled = sum(parts)
        if assembled != matrix.target_dimension - rank:
            logger.warning(
                f"H1({algebra.name})_{degree}: coinvariantes {assembled}, "
                f"rango directo {matrix.target_dimension - rank}"
            )
            raise EnsambladoDiscordanteException(
                f"H1 full de {algebra.name} en k={degree}",
                matrix.target_dimension - rank,
                assembled,
            )

    report = H1Result(
        algebra=algebra.kind,
        size=size,
        degree=degree,
        mode=mode,
        ring=ring,
        partitions=chosen,
        target_dimension=matrix.target_dimension,
        column_count=matrix.column_count,
        rank=rank,
        free_rank=matrix.target_dimension - rank,
        torsion=torsion,
        early_exit=early_exit,
        ranks_by_prime=ranks_by_prime,
        plus_free_rank=plus_free_rank,
        coinvariant_part=coinvariant_part,
        degree_zero_part=degree_zero_part,
    )
    logger.info(
        f"H1({algebra.name})_{degree} [{mode.value}, {ring.value}] = {report.description()}"
    )
    return report


def generation_profile(
    kind: AlgebraKind, size: int, max_degree: int, workers: int = 1
) -> list[GenerationRow]:
    """Rangos de {(k-1,1)} y {(k-1,1),(k-2,2)} frente al de todas las particiones positivas."""
    algebra = algebra_for(kind, size)
    rows = []
    for degree in range(2, max_degree + 1):
        algebra.check_range(degree, Mode.PLUS, Ring.Q)
        every = bracket_span(algebra, degree, default_partitions(degree, Mode.PLUS), workers)
        full = exact_rank(every)
        subsets: list[tuple[Partition, ...]] = [((degree - 1, 1),)]
        if degree >= 3:
            subsets.append(((degree - 1, 1), (degree - 2, 2)))
        previous = 0
        for subset in subsets:
            matrix = bracket_span(algebra, degree, subset, workers)
            rank = exact_rank(matrix).rank
            if rank < previous:
                raise FueraDeRangoException(
                    algebra.kind.value, size, degree, "el rango baja al agregar particiones"
                )
            previous = rank
            rows.append(
                GenerationRow(
                    degree=degree,
                    partitions=matrix.partitions,
                    rank=rank,
                    target_dimension=matrix.target_dimension,
                    full_rank=full.rank,
                )
            )
    return rows


def _wedge_coordinates(t: TensorElement, letters: int) -> dict[int, int]:
    """Coordenadas de la parte antisimetrica de un tensor de H (x) H en la base e_i ^ e_j."""
    index = {}
    for i in range(1, letters + 1):
        for j in range(i + 1, letters + 1):
            index[(i, j)] = len(index)
    coordinates: dict[int, int] = {}
    for (i, j), c in t.terms:
        if i == j:
            continue
        key, sign = ((i, j), 1) if i < j else ((j, i), -1)
        coordinates[index[key]] = coordinates.get(index[key], 0) + sign * int(c)
    return {r: c for r, c in coordinates.items() if c}


def c13_projection_check(genus: int) -> ProjectionCheck:
    """H1(a_g+)_2 se identifica con la potencia exterior modulo omega_0 via C13."""
    letters = 2 * genus
    omega = _wedge_coordinates(omega0_letters(genus), letters)

    def projection(tensor: SympDerivation) -> dict[int, int]:
        return _wedge_coordinates(contraction_c13(symp_to_derivation(tensor)), letters)

    brackets = FractionFreeEliminator(comb(letters, 2))
    brackets.add(omega)
    degree_one = a_basis(genus, 1)
    for a, left in enumerate(degree_one):
        for right in degree_one[a + 1 :]:
            value = combination_to_tensor(bracket_spider(left, right), genus, 2)
            brackets.add(projection(value))
    image = FractionFreeEliminator(comb(letters, 2))
    image.add(omega)
    for spider in a_basis(genus, 2):
        image.add(projection(spider_to_tensor(spider)))
    h1 = h1_weight(AlgebraKind.SYMP, genus, 2, Mode.PLUS, Ring.Q)
    check = ProjectionCheck(
        genus=genus,
        h1_dimension=h1.free_rank,
        target_dimension=comb(letters, 2) - 1,
        kills_brackets=brackets.rank == 1,
        surjective=image.rank == comb(letters, 2),
    )
    logger.info(f"Proyeccion C13 en g={genus}: {check}")
    return check


def in_bracket_image(vector: SympDerivation, exact: bool = True, workers: int = 1) -> bool:
    """Decide por rango si un elemento de a_g(k) esta en sum [a_g(i), a_g(j)], i, j >= 1."""
    algebra = SympAlgebra(vector.genus)
    matrix = bracket_span(
        algebra, vector.degree, default_partitions(vector.degree, Mode.PLUS), workers
    )
    coordinates = integral_column(algebra.coordinates(tensor_to_symp(vector)))
    answer = membership(coordinates, matrix, exact=exact)
    logger.info(f"Pertenencia a la imagen del corchete en g={vector.genus}: {answer}")
    return answer
