"""Forma simplectica, omega_0 y el paso entre tensores y derivaciones.

H se identifica con su dual por x -> mu(x, .), asi un tensor w_1 (x) v de
H^(x)(k+2) es la derivacion y -> mu(w_1, y) v. Con las letras a_i = i y
b_i = g + i esto da la derivacion x_{-w_1}^* (x) v con signo sign(w_1).
"""

import logging
from collections import defaultdict

from src.features.derivations.domain.entities import AssocDerivation, DerivationKey
from src.features.derivations.domain.services.associative import apply_assoc
from src.features.free_algebra.domain.entities import Coefficient, TensorElement, Word
from src.features.free_algebra.domain.exceptions import RangoIncompatibleException
from src.features.symplectic.domain.entities import check_colors
from src.features.symplectic.domain.exceptions import GeneroInvalidoException

logger = logging.getLogger(__name__)


def letter_of(color: int, genus: int) -> int:
    return color if color > 0 else genus - color


def color_of(letter: int, genus: int) -> int:
    return letter if letter <= genus else genus - letter


def colors_to_letters(t: TensorElement, genus: int) -> TensorElement:
    return t.map_keys(lambda w: tuple(letter_of(c, genus) for c in w))


def letters_to_colors(t: TensorElement, genus: int) -> TensorElement:
    return t.map_keys(lambda w: tuple(color_of(letter, genus) for letter in w))


def omega0(genus: int) -> TensorElement:
    """omega_0 = sum_i a_i (x) b_i - b_i (x) a_i, sobre colores."""
    if genus < 1:
        raise GeneroInvalidoException(genus)
    terms: dict[Word, Coefficient] = {}
    for i in range(1, genus + 1):
        terms[(i, -i)] = 1
        terms[(-i, i)] = -1
    return TensorElement.from_mapping(terms)


def tensor_to_derivation(
    t: TensorElement, genus: int, degree: int | None = None
) -> AssocDerivation:
    """Derivacion de grado k de T(H_{2g}) asociada a un tensor de H^(x)(k+2) sobre colores.

    El grado solo hace falta para el tensor nulo.
    """
    if degree is None:
        length = t.degree
        if length is None or length < 2:
            raise GeneroInvalidoException(genus, length)
        degree = length - 2
    acc: dict[DerivationKey, Coefficient] = defaultdict(int)
    for word, c in t.terms:
        check_colors(word, genus)
        head, tail = word[0], word[1:]
        key = (letter_of(-head, genus), tuple(letter_of(x, genus) for x in tail))
        acc[key] += c if head > 0 else -c
    return AssocDerivation.from_mapping(acc, rank=2 * genus, degree=degree)


def derivation_to_tensor(derivation: AssocDerivation) -> TensorElement:
    """Inversa de tensor_to_derivation: x_l^* (x) v -> sign(w_1) w_1 (x) v, w_1 = -color(l)."""
    if derivation.rank % 2:
        raise GeneroInvalidoException(derivation.rank)
    genus = derivation.rank // 2
    acc: dict[Word, Coefficient] = defaultdict(int)
    for (dual, word), c in derivation.terms:
        head = -color_of(dual, genus)
        acc[(head,) + tuple(color_of(x, genus) for x in word)] += c if head > 0 else -c
    return TensorElement.from_mapping(acc)


def is_symplectic(derivation: AssocDerivation, genus: int) -> bool:
    """D(omega_0) = 0 en T(H_{2g})."""
    if derivation.rank != 2 * genus:
        raise RangoIncompatibleException(derivation.rank, 2 * genus)
    image = apply_assoc(derivation, colors_to_letters(omega0(genus), genus))
    return image.is_zero()
