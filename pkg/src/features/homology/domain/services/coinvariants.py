"""Coinvariantes de modulos de sp sobre potencias tensoriales de H.

Los modulos viven en H^(x)m con letras 1..2g (a_i = i, b_i = g + i). sp = a_g(0)
actua como derivacion de grado 0 de T(H).

Tambien se arma g(k) como g(0)-modulo para el modo full de H1: sus coinvariantes
son la parte de H1(g)_k que viene de H1(g+)_k, y en peso 0 dan H1(g(0)).
"""

import logging
from collections.abc import Callable, Sequence
from itertools import combinations, combinations_with_replacement, permutations
from typing import Any

from sympy.combinatorics import Permutation

from src.config.settings import settings
from src.domain.shared.custom_types import AlgebraKind
from src.features.derivations.domain.entities import AssocDerivation
from src.features.derivations.domain.services.associative import apply_assoc, bracket_assoc
from src.features.derivations.domain.services.lie import bracket_lie_der
from src.features.free_algebra.domain.entities import (
    Coefficient,
    LinearCombination,
    TensorElement,
    Word,
)
from src.features.homology.domain.entities import (
    CoinvariantsResult,
    Partition,
    RepresentationModule,
    SparseColumn,
)
from src.features.homology.domain.exceptions import (
    AlgebraNoSoportadaException,
    FueraDeRangoException,
    ModuloInvalidoException,
)
from src.features.homology.domain.services.elimination import FractionFreeEliminator
from src.features.homology.domain.services.graded_algebras import basis_of
from src.features.homology.domain.services.span import integral_column
from src.features.symplectic.domain.services.spiders import (
    a_basis,
    bracket_symp,
    sp_action,
    spider_to_tensor,
    symp_to_derivation,
)
from src.features.symplectic.domain.services.symplectic_form import colors_to_letters, omega0

logger = logging.getLogger(__name__)

# accion o corchete: (x, y) -> combinacion lineal
Action = Callable[[Any, Any], LinearCombination[Any]]


def _tensor(terms: dict[Word, Coefficient]) -> TensorElement:
    return TensorElement.from_mapping(terms)


def omega0_letters(genus: int) -> TensorElement:
    return colors_to_letters(omega0(genus), genus)


def trivial_module(genus: int) -> RepresentationModule:
    """La recta de omega_0, que sp fija."""
    return RepresentationModule("trivial", genus, (omega0_letters(genus),))


def exterior_square(genus: int) -> RepresentationModule:
    letters = range(1, 2 * genus + 1)
    basis = tuple(_tensor({(i, j): 1, (j, i): -1}) for i, j in combinations(letters, 2))
    return RepresentationModule("wedge2", genus, basis)


def exterior_square_mod_omega(genus: int) -> RepresentationModule:
    module = exterior_square(genus)
    return RepresentationModule(
        "wedge2/omega0", genus, module.basis, relations=(omega0_letters(genus),)
    )


def symmetric_cube(genus: int) -> RepresentationModule:
    letters = range(1, 2 * genus + 1)
    basis = tuple(
        _tensor({word: 1 for word in set(permutations(triple))})
        for triple in combinations_with_replacement(letters, 3)
    )
    return RepresentationModule("sym3", genus, basis)


def exterior_cube(genus: int) -> RepresentationModule:
    letters = range(1, 2 * genus + 1)
    basis = []
    for triple in combinations(letters, 3):
        terms = {}
        for order in permutations(range(3)):
            terms[tuple(triple[i] for i in order)] = Permutation(list(order)).signature()
        basis.append(_tensor(terms))
    return RepresentationModule("wedge3", genus, tuple(basis))


MODULE_BUILDERS = {
    "trivial": trivial_module,
    "wedge2": exterior_square,
    "wedge2/omega0": exterior_square_mod_omega,
    "sym3": symmetric_cube,
    "wedge3": exterior_cube,
}


def sp_generators(genus: int) -> list[AssocDerivation]:
    """Base de sp = a_g(0) como derivaciones de grado 0."""
    return [symp_to_derivation(spider_to_tensor(s)) for s in a_basis(genus, 0)]


class _KeyIndex:
    def __init__(self) -> None:
        self.index: dict[Any, int] = {}

    def column(self, element: LinearCombination[Any]) -> SparseColumn:
        coordinates = {}
        for key, c in element.terms:
            coordinates[self.index.setdefault(key, len(self.index))] = c
        return integral_column(coordinates)


def coinvariants(
    module: RepresentationModule,
    generators: Sequence[Any],
    act: Action = apply_assoc,
) -> CoinvariantsResult:
    """Cociente del modulo por sus relaciones y por la imagen de la accion.

    `act(generador, elemento)` da la accion; por defecto la de una derivacion de
    grado 0 sobre tensores.
    """
    size = len(module.basis)
    if size > settings.MAX_TARGET_DIMENSION:
        raise FueraDeRangoException(module.name, module.size, 0, f"modulo de dimension {size}")
    keys = _KeyIndex()
    span = FractionFreeEliminator(rows=0)
    for element in module.basis:
        span.add(keys.column(element))
    if span.rank != size:
        raise ModuloInvalidoException(module.name, "la base no es libre")
    quotient = FractionFreeEliminator(rows=0)
    for relation in module.relations:
        quotient.add(keys.column(relation))
    for generator in generators:
        for element in module.basis:
            image = keys.column(act(generator, element))
            if span.reduce(image):
                raise ModuloInvalidoException(module.name, "la accion sale del modulo")
            quotient.add(image)
    dimension = size - quotient.rank
    logger.info(f"Coinvariantes de {module.name} (tamaño {module.size}): dimension {dimension}")
    return CoinvariantsResult(module=module.name, module_dimension=size, dimension=dimension)


def sp_coinvariants(names: Sequence[str], genus: int) -> list[CoinvariantsResult]:
    generators = sp_generators(genus)
    return [coinvariants(MODULE_BUILDERS[name](genus), generators) for name in names]


def _derivation_basis(kind: AlgebraKind, size: int, degree: int) -> list[LinearCombination[Any]]:
    if kind == AlgebraKind.SYMP:
        return [spider_to_tensor(spider) for spider in a_basis(size, degree)]
    return list(basis_of(kind.value, size, degree))


# algebra -> (corchete de g, accion de g(0))
_BRACKETS: dict[AlgebraKind, tuple[Action, Action]] = {
    AlgebraKind.ASSOC: (bracket_assoc, bracket_assoc),
    AlgebraKind.LIE: (bracket_lie_der, bracket_lie_der),
    AlgebraKind.SYMP: (bracket_symp, sp_action),
}


def derivation_module(
    kind: AlgebraKind | str, size: int, degree: int, partitions: Sequence[Partition]
) -> tuple[RepresentationModule, list[LinearCombination[Any]], Action]:
    """g(k) como g(0)-modulo con relaciones [g(i), g(j)], i, j >= 1, de las particiones.

    g(0) solo actua si (0, k) esta entre las particiones. En a_g los elementos son
    tensores de aranas y el corchete es el de Der(T(H)).
    """
    kind = AlgebraKind(kind)
    if kind not in _BRACKETS:
        raise AlgebraNoSoportadaException(kind.value, "no hay g(0) con que actuar")
    bracket, act = _BRACKETS[kind]
    pairs = sorted({(min(p), max(p)) for p in partitions})
    relations = []
    for i, j in pairs:
        if i < 1:
            continue
        left_basis = _derivation_basis(kind, size, i)
        right_basis = left_basis if i == j else _derivation_basis(kind, size, j)
        for a, left in enumerate(left_basis):
            for b, right in enumerate(right_basis):
                if i < j or a < b:
                    relations.append(bracket(left, right))
    generators = _derivation_basis(kind, size, 0) if (0, degree) in pairs else []
    module = RepresentationModule(
        f"{kind.value}({size})_{degree}",
        size,
        tuple(_derivation_basis(kind, size, degree)),
        relations=tuple(relations),
    )
    return module, generators, act


def full_mode_parts(
    kind: AlgebraKind | str, size: int, degree: int, partitions: Sequence[Partition]
) -> tuple[int, int]:
    """(coinvariantes de H1(g+)_k bajo g(0), H1(g(0))) calculadas como coinvariantes."""
    module, generators, act = derivation_module(kind, size, degree, partitions)
    dimension = coinvariants(module, generators, act).dimension
    return (0, dimension) if degree == 0 else (dimension, 0)


# Sumandos de H1(a_g+)_k como sp-modulos en los pesos en que se conocen
H1_PLUS_MODULES: dict[int, tuple[str, ...]] = {
    1: ("sym3", "wedge3"),
    2: ("wedge2/omega0",),
}
