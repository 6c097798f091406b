"""Aranas, su corchete y la base de a_g(k).

El corchete de dos aranas contrae cada par de patas con colores opuestos:

    [S(I), S(J)] = sum_{a, b} mu(I_a, J_b) S(I_{a+1} .. I_{a-1}, J_{b+1} .. J_{b-1})

Las combinaciones de aranas usan siempre la suma completa de rotaciones. La base de
a_g(k) usa en cambio la suma de las rotaciones distintas (orbita primitiva), que para
una arana con estabilizador de orden s vale S / s.
"""

import logging
from collections import defaultdict
from fractions import Fraction

from src.features.derivations.domain.entities import AssocDerivation
from src.features.derivations.domain.exceptions import GradoInvalidoException
from src.features.derivations.domain.services.associative import bracket_assoc
from src.features.free_algebra.domain.entities import (
    Coefficient,
    LinearCombination,
    TensorElement,
    Word,
)
from src.features.free_algebra.domain.services.lyndon import necklace_count, necklaces
from src.features.symplectic.domain.entities import (
    SignedPermutation,
    Spider,
    SympDerivation,
    canonical_rotation,
)
from src.features.symplectic.domain.exceptions import (
    GeneroIncompatibleException,
    GeneroInvalidoException,
)
from src.features.symplectic.domain.services.symplectic_form import (
    derivation_to_tensor,
    tensor_to_derivation,
)

logger = logging.getLogger(__name__)

SpiderCombination = LinearCombination[Spider]


def _check_same_genus(left: int, right: int) -> None:
    if left != right:
        raise GeneroIncompatibleException(left, right)


def spider_to_tensor(spider: Spider) -> SympDerivation:
    """Suma de las k+2 rotaciones, con multiplicidad."""
    acc: dict[Word, Coefficient] = defaultdict(int)
    colors = spider.colors
    for i in range(len(colors)):
        acc[colors[i:] + colors[:i]] += 1
    return SympDerivation.from_mapping(acc, genus=spider.genus, degree=spider.degree)


def orbit_tensor(spider: Spider) -> SympDerivation:
    """Vector de la base de a_g(k): cada rotacion distinta una vez."""
    return SympDerivation.from_mapping(
        {w: 1 for w in spider.rotations()}, genus=spider.genus, degree=spider.degree
    )


def combination_to_tensor(
    combination: SpiderCombination, genus: int, degree: int
) -> SympDerivation:
    acc: dict[Word, Coefficient] = defaultdict(int)
    for spider, c in combination.terms:
        _check_same_genus(spider.genus, genus)
        if spider.degree != degree:
            raise GradoInvalidoException("La combinacion de aranas", degree, spider.degree)
        colors = spider.colors
        for i in range(len(colors)):
            acc[colors[i:] + colors[:i]] += c
    return SympDerivation.from_mapping(acc, genus=genus, degree=degree)


def tensor_to_symp(derivation: SympDerivation) -> SpiderCombination:
    """Escribe un tensor invariante como combinacion de aranas (sumas completas)."""
    acc: dict[Spider, Coefficient] = {}
    for word, c in derivation.terms:
        if word != canonical_rotation(word):
            continue
        spider = Spider(word, derivation.genus)
        acc[spider] = Fraction(c, spider.stabilizer_order)
    return LinearCombination.from_mapping(acc)


def orbit_coordinates(combination: SpiderCombination) -> dict[Spider, Coefficient]:
    """Coordenadas en la base de orbitas primitivas: S = s * orbita."""
    acc: dict[Spider, Coefficient] = defaultdict(int)
    for spider, c in combination.terms:
        acc[spider] += c * spider.stabilizer_order
    return {spider: c for spider, c in acc.items() if c != 0}


def bracket_spider_terms(left: Spider, right: Spider) -> dict[Spider, Coefficient]:
    _check_same_genus(left.genus, right.genus)
    acc: dict[Spider, Coefficient] = defaultdict(int)
    left_colors, right_colors = left.colors, right.colors
    for a, x in enumerate(left_colors):
        rest = left_colors[a + 1 :] + left_colors[:a]
        for b, y in enumerate(right_colors):
            if x == -y:
                colors = rest + right_colors[b + 1 :] + right_colors[:b]
                acc[Spider(colors, left.genus)] += 1 if x > 0 else -1
    return acc


def bracket_spider(left: Spider, right: Spider) -> SpiderCombination:
    """Corchete de dos aranas; el grado es aditivo."""
    return LinearCombination.from_mapping(bracket_spider_terms(left, right))


def bracket_spider_combinations(
    left: SpiderCombination, right: SpiderCombination
) -> SpiderCombination:
    acc: dict[Spider, Coefficient] = defaultdict(int)
    for s1, c1 in left.terms:
        for s2, c2 in right.terms:
            for s, c in bracket_spider_terms(s1, s2).items():
                acc[s] += c1 * c2 * c
    return LinearCombination.from_mapping(acc)


def a_basis(genus: int, degree: int) -> list[Spider]:
    """Una arana canonica por collar de longitud k+2 sobre los 2g colores."""
    if genus < 1 or degree < 0:
        raise GeneroInvalidoException(genus, degree)
    # La letra t del collar es el color de rango t: 1, -1, 2, -2, ...
    basis = [
        Spider(tuple((t + 1) // 2 if t % 2 else -(t // 2) for t in word), genus)
        for word, _ in necklaces(2 * genus, degree + 2)
    ]
    logger.debug(f"Base de a_{genus}({degree}): {len(basis)} aranas")
    return basis


def a_dimension(genus: int, degree: int) -> int:
    if genus < 1 or degree < 0:
        raise GeneroInvalidoException(genus, degree)
    return necklace_count(2 * genus, degree + 2)


def symp_to_derivation(derivation: SympDerivation) -> AssocDerivation:
    return tensor_to_derivation(
        TensorElement(terms=derivation.terms), derivation.genus, derivation.degree
    )


def derivation_to_symp(derivation: AssocDerivation) -> SympDerivation:
    return SympDerivation(
        terms=derivation_to_tensor(derivation).terms,
        genus=derivation.rank // 2,
        degree=derivation.degree,
    )


def bracket_symp(left: SympDerivation, right: SympDerivation) -> SympDerivation:
    """Corchete de a_g calculado en Der(T(H))."""
    _check_same_genus(left.genus, right.genus)
    return derivation_to_symp(bracket_assoc(symp_to_derivation(left), symp_to_derivation(right)))


def sp_action(element: SympDerivation, derivation: SympDerivation) -> SympDerivation:
    """Accion infinitesimal de sp = a_g(0) sobre a_g(k)."""
    if element.degree != 0:
        raise GradoInvalidoException("La accion de sp", 0, element.degree)
    return bracket_symp(element, derivation)


def spider_weight(spider: Spider) -> tuple[int, ...]:
    """Peso para el toro diagonal de sp: +1 por cada a_i y -1 por cada b_i."""
    weight = [0] * spider.genus
    for color in spider.colors:
        weight[abs(color) - 1] += 1 if color > 0 else -1
    return tuple(weight)


def recolor(spider: Spider, permutation: SignedPermutation) -> tuple[int, Spider]:
    """Aplica un recoloreo de Sp(2g, Z) pata por pata. Devuelve (signo, arana)."""
    _check_same_genus(spider.genus, permutation.genus)
    sign = 1
    colors = []
    for color in spider.colors:
        s, image = permutation.apply(color)
        sign *= s
        colors.append(image)
    return sign, Spider(tuple(colors), spider.genus)


def recolor_combination(
    combination: SpiderCombination, permutation: SignedPermutation
) -> SpiderCombination:
    acc: dict[Spider, Coefficient] = defaultdict(int)
    for spider, c in combination.terms:
        sign, image = recolor(spider, permutation)
        acc[image] += sign * c
    return LinearCombination.from_mapping(acc)


def normalize_chain_colors(
    spider: Spider, start: int = 0
) -> tuple[int, Spider, SignedPermutation]:
    """Recolorea a 1..m en orden de aparicion desde la pata `start`, positivos la primera vez."""
    partial: dict[int, int] = {}
    flipped: list[int] = []
    for color in spider.colors[start:] + spider.colors[:start]:
        index = abs(color)
        if index not in partial:
            partial[index] = len(partial) + 1
            if color < 0:
                flipped.append(index)
    permutation = SignedPermutation.extending(spider.genus, partial, flipped)
    sign, image = recolor(spider, permutation)
    return sign, image, permutation

