import logging
from collections.abc import Iterator

from sympy import divisors, mobius, totient

from src.features.free_algebra.domain.entities import LyndonWord, Word
from src.features.free_algebra.domain.exceptions import (
    PalabraInvalidaException,
    RangoInvalidoException,
)
from src.infrastructure.cache import cached

logger = logging.getLogger(__name__)


def witt_number(n: int, k: int) -> int:
    """Dimension de L_n(k): (1/k) * sum_{d | k} mu(d) n^(k/d)."""
    if n < 1 or k < 1:
        raise RangoInvalidoException(n, k)
    total = sum(int(mobius(d)) * n ** (k // d) for d in divisors(k))
    return total // k


def is_lyndon(word: Word) -> bool:
    """Una palabra es de Lyndon si es estrictamente menor que todas sus rotaciones propias."""
    if not word:
        return False
    return all(word < word[i:] + word[:i] for i in range(1, len(word)))


def standard_factorization(word: Word) -> tuple[Word, Word] | None:
    """Factorizacion estandar w = uv con v el sufijo propio de Lyndon mas largo."""
    if not is_lyndon(word):
        raise PalabraInvalidaException(word, "no es de Lyndon")
    if len(word) == 1:
        return None
    for i in range(1, len(word)):
        suffix = word[i:]
        if is_lyndon(suffix):
            return word[:i], suffix
    # Inalcanzable: la ultima letra siempre es de Lyndon
    raise PalabraInvalidaException(word, "sin factorizacion")


def _duval(n: int, max_length: int) -> Iterator[Word]:
    """Palabras de Lyndon de longitud <= max_length sobre 1..n, en orden lexicografico."""
    w = [0]
    while w:
        w[-1] += 1
        yield tuple(w)
        m = len(w)
        while len(w) < max_length:
            w.append(w[len(w) - m])
        while w and w[-1] == n:
            w.pop()


@cached(key_prefix="lyndon:")
def lyndon_words_up_to(n: int, max_length: int) -> tuple[Word, ...]:
    if n < 1 or max_length < 1:
        raise RangoInvalidoException(n, max_length)
    return tuple(_duval(n, max_length))


@cached(key_prefix="lyndon:")
def lyndon_words(n: int, k: int) -> tuple[Word, ...]:
    """Palabras de Lyndon de longitud exactamente k, ordenadas."""
    if n < 1 or k < 1:
        raise RangoInvalidoException(n, k)
    words = tuple(w for w in _duval(n, k) if len(w) == k)
    logger.debug(f"Base de Lyndon n={n} k={k}: {len(words)} palabras")
    return words


def lyndon_basis(n: int, k: int) -> list[LyndonWord]:
    """Base de Lyndon de L_n(k), con la factorizacion estandar de cada palabra."""
    if n < 2 or k < 1:
        raise RangoInvalidoException(n, k)
    return [
        LyndonWord(letters=w, factorization=standard_factorization(w)) for w in lyndon_words(n, k)
    ]


@cached(key_prefix="lyndon:")
def necklaces(n: int, length: int) -> tuple[tuple[Word, int], ...]:
    """Collares de longitud fija sobre 1..n como (rotacion minima, periodo).

    Cada collar es la potencia u^(length/|u|) de una unica palabra de Lyndon u con |u|
    dividiendo la longitud.
    """
    if n < 1 or length < 1:
        raise RangoInvalidoException(n, length)
    result = [
        (word * (length // len(word)), len(word))
        for word in lyndon_words_up_to(n, length)
        if length % len(word) == 0
    ]
    return tuple(sorted(result))


def necklace_count(n: int, length: int) -> int:
    """Lema de Burnside: (1/L) * sum_{d | L} phi(d) n^(L/d)."""
    if n < 1 or length < 1:
        raise RangoInvalidoException(n, length)
    return sum(int(totient(d)) * n ** (length // d) for d in divisors(length)) // length
