"""Derivaciones del algebra tensorial T(H_n).

Una derivacion de grado k queda determinada por su valor en los generadores, y se
guarda como combinacion de x_l^* (x) palabra. El corchete usa la formula cerrada de
insercion: para F = f (x) u y G = g (x) v,

    [F, G] = sum_s f(v_s) g (x) v_1..v_{s-1} u v_{s+1}..
           - sum_t g(u_t) f (x) u_1..u_{t-1} v u_{t+1}..
"""

import logging
from collections import defaultdict
from collections.abc import Iterator
from itertools import product

from src.features.derivations.domain.entities import AssocDerivation, DerivationKey
from src.features.derivations.domain.exceptions import GradoInvalidoException
from src.features.free_algebra.domain.entities import Coefficient, TensorElement, Word
from src.features.free_algebra.domain.exceptions import (
    LetraFueraDeRangoException,
    RangoIncompatibleException,
    RangoInvalidoException,
)

logger = logging.getLogger(__name__)


def _check_same_rank(left: AssocDerivation, right: AssocDerivation) -> None:
    if left.rank != right.rank:
        raise RangoIncompatibleException(left.rank, right.rank)


def apply_terms(
    images: dict[int, list[tuple[Word, Coefficient]]], terms: dict[Word, Coefficient]
) -> dict[Word, Coefficient]:
    """Extension de Leibniz sobre diccionarios: D(w) = sum_p w_<p D(w_p) w_>p."""
    acc: dict[Word, Coefficient] = defaultdict(int)
    for word, c in terms.items():
        for p, letter in enumerate(word):
            for image, d in images.get(letter, ()):
                acc[word[:p] + image + word[p + 1 :]] += c * d
    return acc


def apply_assoc(derivation: AssocDerivation, t: TensorElement) -> TensorElement:
    """Aplica la derivacion a un tensor por la regla de Leibniz."""
    for word, _ in t.terms:
        for letter in word:
            if not 1 <= letter <= derivation.rank:
                raise LetraFueraDeRangoException(letter, derivation.rank)
    return TensorElement.from_mapping(apply_terms(derivation.images(), t.as_dict()))


def bracket_terms(
    left: tuple[tuple[DerivationKey, Coefficient], ...],
    right: tuple[tuple[DerivationKey, Coefficient], ...],
) -> dict[DerivationKey, Coefficient]:
    """Formula de insercion del corchete sobre listas de terminos."""
    acc: dict[DerivationKey, Coefficient] = defaultdict(int)
    for (f, u), a in left:
        for (g, v), b in right:
            ab = a * b
            for s, letter in enumerate(v):
                if letter == f:
                    acc[(g, v[:s] + u + v[s + 1 :])] += ab
            for t, letter in enumerate(u):
                if letter == g:
                    acc[(f, u[:t] + v + u[t + 1 :])] -= ab
    return acc


def bracket_assoc(left: AssocDerivation, right: AssocDerivation) -> AssocDerivation:
    """[F, G] = F o G - G o F restringido a los generadores."""
    _check_same_rank(left, right)
    return AssocDerivation.from_mapping(
        bracket_terms(left.terms, right.terms),
        rank=left.rank,
        degree=left.degree + right.degree,
    )


def endomorphism_bracket(left: AssocDerivation, right: AssocDerivation) -> AssocDerivation:
    """El mismo corchete calculado componiendo las extensiones de Leibniz."""
    _check_same_rank(left, right)
    left_images, right_images = left.images(), right.images()
    acc: dict[DerivationKey, Coefficient] = defaultdict(int)
    for index in range(1, left.rank + 1):
        generator = {(index,): 1}
        forward = apply_terms(left_images, apply_terms(right_images, generator))
        backward = apply_terms(right_images, apply_terms(left_images, generator))
        for word, c in forward.items():
            acc[(index, word)] += c
        for word, c in backward.items():
            acc[(index, word)] -= c
    return AssocDerivation.from_mapping(acc, rank=left.rank, degree=left.degree + right.degree)


def contraction_c13(derivation: AssocDerivation) -> TensorElement:
    """C13(f (x) u1 (x) u2 (x) u3) = f(u2) u1 (x) u3."""
    if derivation.degree != 2:
        raise GradoInvalidoException("C13", 2, derivation.degree)
    acc: dict[Word, Coefficient] = defaultdict(int)
    for (dual, (u1, u2, u3)), c in derivation.terms:
        if u2 == dual:
            acc[(u1, u3)] += c
    return TensorElement.from_mapping(acc)


def section_s(t: TensorElement, rank: int) -> AssocDerivation:
    """Seccion s(x_i (x) x_j) = x_1^* (x) x_i (x) x_1 (x) x_j de C13."""
    if t.is_zero():
        return AssocDerivation.zero(rank, 2)
    if t.degree != 2:
        raise GradoInvalidoException("La seccion s", 2, t.degree)
    return AssocDerivation.from_mapping(
        {(1, (i, 1, j)): c for (i, j), c in t.terms}, rank=rank, degree=2
    )


def identity_derivation(n: int) -> AssocDerivation:
    """La derivacion de grado 0 que fija cada generador."""
    if n < 1:
        raise RangoInvalidoException(n)
    return AssocDerivation.from_mapping(
        {(i, (i,)): 1 for i in range(1, n + 1)}, rank=n, degree=0
    )


def assoc_basis_keys(n: int, k: int) -> Iterator[DerivationKey]:
    """Base de Der(T(H_n))(k) en orden lexicografico: n^(k+2) claves."""
    if n < 1 or k < 0:
        raise RangoInvalidoException(n, k)
    for dual in range(1, n + 1):
        for word in product(range(1, n + 1), repeat=k + 1):
            yield (dual, word)


def assoc_basis(n: int, k: int) -> list[AssocDerivation]:
    return [
        AssocDerivation.from_mapping({key: 1}, rank=n, degree=k) for key in assoc_basis_keys(n, k)
    ]


def assoc_dimension(n: int, k: int) -> int:
    return int(n ** (k + 2))
