"""Corchete del algebra de Lie libre en la base de Lyndon y su inclusion en el algebra tensorial.

El corchete de dos palabras de Lyndon u < v se reescribe con la factorizacion estandar:
si u es una letra o el factor derecho de u es >= v, entonces uv es de Lyndon y su
factorizacion es (u, v). En otro caso u = (u1, u2) y se usa Jacobi,
[[u1, u2], v] = [u1, [u2, v]] - [u2, [u1, v]].
"""

import logging
from collections import defaultdict
from collections.abc import Sequence

from src.features.free_algebra.domain.entities import (
    Coefficient,
    LieElement,
    TensorElement,
    Word,
)
from src.features.free_algebra.domain.exceptions import (
    NoEsElementoDeLieException,
    RangoIncompatibleException,
    RangoInvalidoException,
)
from src.features.free_algebra.domain.services.lyndon import is_lyndon, standard_factorization
from src.infrastructure.cache import cached

logger = logging.getLogger(__name__)

Terms = tuple[tuple[Word, int], ...]


@cached(key_prefix="lie:")
def bracket_lyndon_words(u: Word, v: Word) -> Terms:
    """[P(u), P(v)] en la base de Lyndon, como lista de (palabra, coeficiente)."""
    if u == v:
        return ()
    if u > v:
        return tuple((w, -c) for w, c in bracket_lyndon_words(v, u))

    factorization = standard_factorization(u)
    if factorization is None or factorization[1] >= v:
        return ((u + v, 1),)

    u1, u2 = factorization
    acc: dict[Word, int] = defaultdict(int)
    for w, c in bracket_lyndon_words(u2, v):
        for w2, c2 in bracket_lyndon_words(u1, w):
            acc[w2] += c * c2
    for w, c in bracket_lyndon_words(u1, v):
        for w2, c2 in bracket_lyndon_words(u2, w):
            acc[w2] -= c * c2
    return tuple(sorted((w, c) for w, c in acc.items() if c != 0))


@cached(key_prefix="lie:")
def lyndon_polynomial(word: Word) -> Terms:
    """P(w) como tensor: P(uv) = P(u)P(v) - P(v)P(u)."""
    factorization = standard_factorization(word)
    if factorization is None:
        return ((word, 1),)
    u, v = factorization
    pu, pv = lyndon_polynomial(u), lyndon_polynomial(v)
    acc: dict[Word, int] = defaultdict(int)
    for a, ca in pu:
        for b, cb in pv:
            acc[a + b] += ca * cb
            acc[b + a] -= ca * cb
    return tuple(sorted((w, c) for w, c in acc.items() if c != 0))


def lie_bracket_terms(
    left: dict[Word, Coefficient] | LieElement, right: dict[Word, Coefficient] | LieElement
) -> dict[Word, Coefficient]:
    """Version sobre diccionarios para los bucles internos."""
    left_items = left.terms if isinstance(left, LieElement) else left.items()
    right_items = right.terms if isinstance(right, LieElement) else right.items()
    acc: dict[Word, Coefficient] = defaultdict(int)
    right_list = list(right_items)
    for u, a in left_items:
        for v, b in right_list:
            for w, c in bracket_lyndon_words(u, v):
                acc[w] += a * b * c
    return acc


def lie_bracket(a: LieElement, b: LieElement) -> LieElement:
    """Corchete de dos elementos de L_n, expresado en la base de Lyndon."""
    if a.rank != b.rank:
        raise RangoIncompatibleException(a.rank, b.rank)
    return LieElement.from_mapping(lie_bracket_terms(a, b), rank=a.rank)


def left_normed_bracket(letters: Sequence[int], rank: int) -> LieElement:
    """[x_i1, x_i2, ..., x_ik] = [[...[x_i1, x_i2], ...], x_ik]."""
    if not letters:
        raise RangoInvalidoException(rank, 0)
    acc: dict[Word, Coefficient] = {(letters[0],): 1}
    for letter in letters[1:]:
        acc = lie_bracket_terms(acc, {(letter,): 1})
    return LieElement.from_mapping(acc, rank=rank)


def lie_terms_to_tensor(terms: dict[Word, Coefficient] | LieElement) -> dict[Word, Coefficient]:
    items = terms.terms if isinstance(terms, LieElement) else terms.items()
    acc: dict[Word, Coefficient] = defaultdict(int)
    for w, c in items:
        for word, coeff in lyndon_polynomial(w):
            acc[word] += c * coeff
    return acc


def lie_to_tensor(a: LieElement) -> TensorElement:
    """Inclusion L_n -> T(H_n) reemplazando [X, Y] por X (x) Y - Y (x) X."""
    return TensorElement.from_mapping(lie_terms_to_tensor(a))


def tensor_to_lie(t: TensorElement, rank: int) -> LieElement:
    """Escribe en la base de Lyndon un tensor que esta en la imagen de lie_to_tensor.

    P(w) = w + palabras mayores, asi que la palabra minima del soporte siempre es de
    Lyndon y su coeficiente es el coeficiente de P(w).
    """
    remaining: dict[Word, Coefficient] = dict(t.terms)
    result: dict[Word, Coefficient] = {}
    while remaining:
        w = min(remaining)
        c = remaining[w]
        if not is_lyndon(w):
            raise NoEsElementoDeLieException(w)
        result[w] = c
        for word, coeff in lyndon_polynomial(w):
            value = remaining.get(word, 0) - c * coeff
            if value == 0:
                remaining.pop(word, None)
            else:
                remaining[word] = value
    return LieElement.from_mapping(result, rank=rank)
