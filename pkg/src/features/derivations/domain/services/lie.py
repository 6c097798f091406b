"""Derivaciones del algebra de Lie libre L_n, trazas tr_k y la seccion Phi_k."""

import logging
from collections import defaultdict
from collections.abc import Iterator

from src.features.derivations.domain.entities import (
    AssocDerivation,
    DerivationKey,
    LieDerivation,
    SymmetricMonomial,
)
from src.features.derivations.domain.exceptions import IndiceNoAdmisibleException
from src.features.free_algebra.domain.entities import (
    Coefficient,
    LieElement,
    LinearCombination,
    Word,
)
from src.features.free_algebra.domain.exceptions import (
    RangoIncompatibleException,
    RangoInvalidoException,
)
from src.features.free_algebra.domain.services.lie_algebra import (
    left_normed_bracket,
    lie_bracket_terms,
    lyndon_polynomial,
)
from src.features.free_algebra.domain.services.lyndon import (
    lyndon_words,
    standard_factorization,
    witt_number,
)

logger = logging.getLogger(__name__)

LieImages = dict[int, dict[Word, Coefficient]]


def lie_images(derivation: LieDerivation) -> LieImages:
    """Imagen de cada generador como elemento de Lie."""
    result: LieImages = {}
    for (dual, word), c in derivation.terms:
        result.setdefault(dual, {})[word] = c
    return result


def _derive_word(
    images: LieImages, word: Word, memo: dict[Word, dict[Word, Coefficient]]
) -> dict[Word, Coefficient]:
    if word in memo:
        return memo[word]
    factorization = standard_factorization(word)
    if factorization is None:
        result: dict[Word, Coefficient] = dict(images.get(word[0], {}))
    else:
        u, v = factorization
        result = lie_bracket_terms(_derive_word(images, u, memo), {v: 1})
        for w, c in lie_bracket_terms({u: 1}, _derive_word(images, v, memo)).items():
            result[w] = result.get(w, 0) + c
    memo[word] = result
    return result


def apply_lie_terms(
    images: LieImages,
    terms: dict[Word, Coefficient],
    memo: dict[Word, dict[Word, Coefficient]] | None = None,
) -> dict[Word, Coefficient]:
    """Leibniz sobre el corchete: F[a, b] = [Fa, b] + [a, Fb]."""
    memo = {} if memo is None else memo
    acc: dict[Word, Coefficient] = defaultdict(int)
    for word, c in terms.items():
        for w, d in _derive_word(images, word, memo).items():
            acc[w] += c * d
    return acc


def apply_lie(derivation: LieDerivation, element: LieElement) -> LieElement:
    """Aplica una derivacion a un elemento de L_n."""
    if derivation.rank != element.rank:
        raise RangoIncompatibleException(derivation.rank, element.rank)
    return LieElement.from_mapping(
        apply_lie_terms(lie_images(derivation), element.as_dict()), rank=element.rank
    )


def bracket_lie_terms(
    left: LieDerivation, right: LieDerivation
) -> dict[DerivationKey, Coefficient]:
    left_images, right_images = lie_images(left), lie_images(right)
    left_memo: dict[Word, dict[Word, Coefficient]] = {}
    right_memo: dict[Word, dict[Word, Coefficient]] = {}
    acc: dict[DerivationKey, Coefficient] = defaultdict(int)
    for index in set(left_images) | set(right_images):
        if index in right_images:
            for w, c in apply_lie_terms(left_images, right_images[index], left_memo).items():
                acc[(index, w)] += c
        if index in left_images:
            for w, c in apply_lie_terms(right_images, left_images[index], right_memo).items():
                acc[(index, w)] -= c
    return acc


def bracket_lie_der(left: LieDerivation, right: LieDerivation) -> LieDerivation:
    """Conmutador de las extensiones de Leibniz evaluado en los generadores."""
    if left.rank != right.rank:
        raise RangoIncompatibleException(left.rank, right.rank)
    return LieDerivation.from_mapping(
        bracket_lie_terms(left, right), rank=left.rank, degree=left.degree + right.degree
    )


def lie_der_to_assoc(derivation: LieDerivation) -> AssocDerivation:
    """Inclusion Der(L_n) -> Der(T(H_n)) via lie_to_tensor en cada imagen."""
    acc: dict[DerivationKey, Coefficient] = defaultdict(int)
    for (dual, word), c in derivation.terms:
        for w, d in lyndon_polynomial(word):
            acc[(dual, w)] += c * d
    return AssocDerivation.from_mapping(acc, rank=derivation.rank, degree=derivation.degree)


def trace_tr_k(derivation: LieDerivation) -> LinearCombination[SymmetricMonomial]:
    """tr_k: contraccion C12 seguida de la simetrizacion en S^k H_n.

    x_l^* (x) w contribuye w_2..w_{k+1} cuando w_1 = l. Tambien se admite k = 1.
    """
    acc: dict[SymmetricMonomial, Coefficient] = defaultdict(int)
    for (dual, word), c in derivation.terms:
        for w, d in lyndon_polynomial(word):
            if w[0] == dual:
                acc[SymmetricMonomial.of(w[1:])] += c * d
    return LinearCombination.from_mapping(acc)


def phi_k(monomial: SymmetricMonomial, n: int) -> LieDerivation:
    """Phi_k(x_i2 ... x_ik+1) = x_l^* (x) [x_l, x_i2, ..., x_ik+1], l minimo fuera del monomio."""
    if monomial.size < 1 or n < monomial.size + 2:
        raise RangoInvalidoException(n, monomial.size)
    index = min(set(range(1, n + 1)) - set(monomial.letters))
    return phi_k_with_index(monomial, n, index)


def phi_k_with_index(monomial: SymmetricMonomial, n: int, index: int) -> LieDerivation:
    if index in monomial.letters or not 1 <= index <= n:
        raise IndiceNoAdmisibleException(monomial.letters, n)
    bracket = left_normed_bracket([index, *monomial.letters], n)
    return LieDerivation.from_mapping(
        {(index, w): c for w, c in bracket.terms}, rank=n, degree=monomial.size
    )


def lie_der_basis_keys(n: int, k: int) -> Iterator[DerivationKey]:
    """Base de Der(L_n)(k): pares (dual, palabra de Lyndon de longitud k+1)."""
    if n < 2 or k < 0:
        raise RangoInvalidoException(n, k)
    words = lyndon_words(n, k + 1)
    for dual in range(1, n + 1):
        for word in words:
            yield (dual, word)


def lie_der_basis(n: int, k: int) -> list[LieDerivation]:
    return [
        LieDerivation.from_mapping({key: 1}, rank=n, degree=k) for key in lie_der_basis_keys(n, k)
    ]


def lie_der_dimension(n: int, k: int) -> int:
    return n * witt_number(n, k + 1)
