"""Identidades de reescritura que expresan generadores como corchetes.

Cada funcion arma una BracketRewriting con target = sum c [F, G] + sum c D y
evaluate_rewriting devuelve el residuo, que debe ser cero. Las familias cubren la
generacion de Der(T(H_n)) en grado 2 y grado k >= 3, la de Der(L_n), y las
identidades de grado 0.
"""

import logging
from collections.abc import Sequence
from itertools import product

from src.features.derivations.domain.entities import (
    AssocDerivation,
    BracketRewriting,
    GradedDerivation,
    LieDerivation,
)
from src.features.derivations.domain.exceptions import DerivacionException
from src.features.derivations.domain.services.associative import (
    bracket_assoc,
    contraction_c13,
    identity_derivation,
)
from src.features.derivations.domain.services.lie import bracket_lie_der
from src.features.free_algebra.domain.entities import Coefficient, TensorElement, Word
from src.features.free_algebra.domain.services.lie_algebra import lie_bracket_terms

logger = logging.getLogger(__name__)

LiePart = int | dict[Word, Coefficient]


class IdentidadNoAplicableException(DerivacionException):
    """Excepcion lanzada cuando los indices no cumplen las hipotesis de la identidad."""

    def __init__(self, name: str, reason: str):
        self.message = f"La identidad {name} no aplica: {reason}"
        super().__init__(self.message)


def _assoc(dual: int, word: Sequence[int], n: int) -> AssocDerivation:
    return AssocDerivation.basis_element(dual, word, n)


def _lie(dual: int, parts: Sequence[LiePart], n: int) -> LieDerivation:
    """x_dual^* (x) [p1, p2, ...] normado a izquierda; cada parte es letra o elemento."""
    as_terms = [{(p,): 1} if isinstance(p, int) else p for p in parts]
    acc: dict[Word, Coefficient] = as_terms[0]
    for part in as_terms[1:]:
        acc = lie_bracket_terms(acc, part)
    degree = sum(len(next(iter(p))) for p in as_terms) - 1
    return LieDerivation.from_mapping({(dual, w): c for w, c in acc.items()}, rank=n, degree=degree)


def _pair(i: int, j: int) -> dict[Word, Coefficient]:
    return lie_bracket_terms({(i,): 1}, {(j,): 1})


def evaluate_rewriting(rewriting: BracketRewriting) -> GradedDerivation:
    """target - sum c [F, G] - sum c D. Cero si la identidad es valida."""
    residual = rewriting.target
    for c, left, right in rewriting.brackets:
        if isinstance(left, AssocDerivation) and isinstance(right, AssocDerivation):
            value: GradedDerivation = bracket_assoc(left, right)
        elif isinstance(left, LieDerivation) and isinstance(right, LieDerivation):
            value = bracket_lie_der(left, right)
        else:
            raise DerivacionException(f"Corchete mixto en {rewriting.name}")
        residual = residual - value.scale(c)
    for c, term in rewriting.corrections:
        residual = residual - term.scale(c)
    return residual


# Der(T(H_n)) en grado 2


def assoc_degree_two_rewritings(n: int) -> list[BracketRewriting]:
    """Generadores de grado 2 escritos con [Der(1), Der(1)] y la seccion s."""
    result: list[BracketRewriting] = []
    letters = range(1, n + 1)
    for l, i1, i2, i3 in product(letters, repeat=4):
        if l not in (i1, i2, i3):
            result.append(
                BracketRewriting(
                    "grado2-evita",
                    _assoc(l, (i1, i2, i3), n),
                    ((1, _assoc(l, (i1, i2), n), _assoc(l, (l, i3), n)),),
                )
            )
    for l, i1, i2 in product(letters, repeat=3):
        if l in (i1, i2):
            continue
        result.append(
            BracketRewriting(
                "grado2-cabeza",
                _assoc(l, (l, i1, i2), n),
                ((1, _assoc(i1, (i1, i2), n), _assoc(l, (l, i1), n)),),
            )
        )
        result.append(
            BracketRewriting(
                "grado2-cola",
                _assoc(l, (i1, i2, l), n),
                ((1, _assoc(i1, (i1, i2), n), _assoc(l, (i1, l), n)),),
            )
        )
    for l, i1 in product(letters, repeat=2):
        if l != i1:
            result.append(
                BracketRewriting(
                    "grado2-extremos",
                    _assoc(l, (l, i1, l), n),
                    ((1, _assoc(l, (l, i1), n), _assoc(l, (l, l), n)),),
                )
            )
    # Los que tienen la letra dual en el medio se reducen a la seccion s
    for l, i1, i2 in product(range(2, n + 1), letters, letters):
        if l != i1 and i2 != 1:
            result.append(
                BracketRewriting(
                    "grado2-medio-a",
                    _assoc(l, (i1, l, i2), n),
                    ((-1, _assoc(l, (1, i2), n), _assoc(1, (i1, l), n)),),
                    ((1, _assoc(1, (i1, 1, i2), n)),),
                )
            )
        if l != i2 and i1 != 1:
            result.append(
                BracketRewriting(
                    "grado2-medio-b",
                    _assoc(l, (i1, l, i2), n),
                    ((-1, _assoc(l, (i1, 1), n), _assoc(1, (l, i2), n)),),
                    ((1, _assoc(1, (i1, 1, i2), n)),),
                )
            )
    for l in range(2, n + 1):
        result.append(
            BracketRewriting(
                "grado2-triple",
                _assoc(l, (l, l, l), n),
                (
                    (-1, _assoc(l, (l, 1), n), _assoc(1, (l, l), n)),
                    (1, _assoc(l, (l, l), n), _assoc(1, (l, 1), n)),
                ),
                ((1, _assoc(1, (l, 1, l), n)),),
            )
        )
        result.append(
            BracketRewriting(
                "grado2-uno",
                _assoc(l, (1, l, 1), n),
                (
                    (-1, _assoc(1, (1, 1), n), _assoc(l, (1, l), n)),
                    (1, _assoc(1, (1, l), n), _assoc(l, (1, 1), n)),
                ),
                ((1, _assoc(1, (1, 1, 1), n)),),
            )
        )
    return result


# Der(T(H_n)) en grado k >= 3


def assoc_avoiding_index(l: int, indices: Sequence[int], n: int) -> BracketRewriting:
    """Caso en que l no aparece en la palabra.

    x_l^* (x) x_i1..x_ik+1 = [x_l^* (x) x_ik x_ik+1, x_l^* (x) x_i1..x_ik-1 x_l]
    """
    indices = tuple(indices)
    if l in indices or len(indices) < 3:
        raise IdentidadNoAplicableException("evita", f"l={l}, indices={indices}")
    return BracketRewriting(
        "evita",
        _assoc(l, indices, n),
        ((1, _assoc(l, indices[-2:], n), _assoc(l, indices[:-2] + (l,), n)),),
    )


def assoc_leading_slot(l: int, others: Sequence[int], n: int) -> BracketRewriting:
    """x_l^* (x) x_l x_j1..x_jk = [x_j1^* (x) x_j1..x_jk, x_l^* (x) x_l x_j1]."""
    others = tuple(others)
    if l in others or len(others) < 2:
        raise IdentidadNoAplicableException("cabeza", f"l={l}, otros={others}")
    return BracketRewriting(
        "cabeza",
        _assoc(l, (l,) + others, n),
        ((1, _assoc(others[0], others, n), _assoc(l, (l, others[0]), n)),),
    )


def assoc_slide(l: int, others: Sequence[int], p: int, q: int, n: int) -> BracketRewriting:
    """Desliza x_l dos o mas lugares: la posicion q queda igual a la p modulo corchetes."""
    others = tuple(others)
    if l in others or not 0 <= p < q <= len(others) or q - p < 2:
        raise IdentidadNoAplicableException("desliza", f"p={p}, q={q}, otros={others}")
    return BracketRewriting(
        "desliza",
        _assoc(l, others[:q] + (l,) + others[q:], n),
        ((1, _assoc(l, others[p:q], n), _assoc(l, others[:p] + (l, l) + others[q:], n)),),
        ((-1, _assoc(l, others[:p] + (l,) + others[p:], n)),),
    )


def assoc_general_index(l: int, indices: Sequence[int], m: int, n: int) -> BracketRewriting:
    """Caso general con el indice auxiliar m fuera de i1..ik-1 y las dos correcciones delta."""
    indices = tuple(indices)
    head, ik, ik1 = indices[:-2], indices[-2], indices[-1]
    if m in head or len(indices) < 3:
        raise IdentidadNoAplicableException("general", f"m={m} en {head}")
    corrections: list[tuple[int, GradedDerivation]] = []
    if l == ik:
        corrections.append((1, _assoc(m, head + (m, ik1), n)))
    if l == ik1:
        corrections.append((1, _assoc(m, (ik,) + head + (m,), n)))
    return BracketRewriting(
        "general",
        _assoc(l, indices, n),
        ((1, _assoc(m, (ik, ik1), n), _assoc(l, head + (m,), n)),),
        tuple(corrections),
    )


def assoc_double_tail(
    head: Sequence[int], m: int, n: int, leading: bool = False
) -> BracketRewriting:
    """x_m^* (x) x_i1..x_ik-1 x_m x_m (o x_m x_i1..x_ik-1 x_m) como corchete (k-2, 2)."""
    head = tuple(head)
    if m in head or len(head) < 2:
        raise IdentidadNoAplicableException("cola-doble", f"m={m}, cabeza={head}")
    i1 = head[0]
    if leading:
        target, right = (m,) + head + (m,), (m, i1, m)
    else:
        target, right = head + (m, m), (i1, m, m)
    return BracketRewriting(
        "cola-doble",
        _assoc(m, target, n),
        ((1, _assoc(i1, head, n), _assoc(m, right, n)),),
    )


def assoc_generation_step(l: int, indices: Sequence[int], n: int) -> BracketRewriting:
    """Primer paso de reescritura de un generador de grado k >= 2."""
    indices = tuple(indices)
    if l not in indices:
        return assoc_avoiding_index(l, indices, n)
    candidates = [m for m in range(1, n + 1) if m not in indices[:-2]]
    if not candidates:
        raise IdentidadNoAplicableException("general", f"n={n} no alcanza para {indices}")
    return assoc_general_index(l, indices, candidates[0], n)


# Grado 0


def c13_degree_zero_checks(
    n: int,
) -> list[tuple[AssocDerivation, AssocDerivation, TensorElement]]:
    """Pares (X, D) con X de grado 0 y C13([X, D]) igual al tensor indicado."""
    checks: list[tuple[AssocDerivation, AssocDerivation, TensorElement]] = []
    for i, j in product(range(1, n + 1), repeat=2):
        if i == j:
            continue
        checks.append((_assoc(j, (i,), n), _assoc(j, (j, j, i), n), TensorElement.word(i, i)))
        checks.append((_assoc(j, (j,), n), _assoc(i, (i, i, j), n), TensorElement.word(i, j)))
    return checks


def c13_residual(
    left: AssocDerivation, right: AssocDerivation, expected: TensorElement
) -> TensorElement:
    return contraction_c13(bracket_assoc(left, right)) - expected


def identity_scaling(derivation: AssocDerivation) -> BracketRewriting:
    """[I, D] = k D."""
    identity = identity_derivation(derivation.rank)
    return BracketRewriting(
        "identidad",
        derivation.scale(derivation.degree),
        ((1, identity, derivation),),
    )


# Der(L_n)


def lie_avoiding_pair(l: int, indices: Sequence[int], n: int) -> BracketRewriting:
    """x_l^* (x) [x_i1, ..., x_ik+1] con l distinto de i1, i2."""
    indices = tuple(indices)
    i1, i2, rest = indices[0], indices[1], indices[2:]
    if l in (i1, i2) or not rest:
        raise IdentidadNoAplicableException("lie-evita", f"l={l}, indices={indices}")
    inner = _pair(i1, i2)
    corrections: list[tuple[int, GradedDerivation]] = []
    for j, letter in enumerate(rest):
        if letter == l and inner:
            parts: list[LiePart] = [l, *rest[:j], inner, *rest[j + 1 :]]
            corrections.append((-1, _lie(l, parts, n)))
    return BracketRewriting(
        "lie-evita",
        _lie(l, list(indices), n),
        ((1, _lie(l, [i1, i2], n), _lie(l, [l, *rest], n)),),
        tuple(corrections),
    )


def lie_index_exchange(l: int, others: Sequence[int], m: int, n: int) -> BracketRewriting:
    """Cambia el indice dual l por un m ausente.

    x_l^* (x) [x_l, x_i2, ...]
        = [x_m^* (x) [x_l, x_i2], x_l^* (x) [x_m, x_i3, ...]] + x_m^* (x) [x_m, x_i3, ..., x_i2]
    """
    others = tuple(others)
    if len(others) < 2 or l == others[0] or m in others:
        raise IdentidadNoAplicableException("lie-intercambio", f"l={l}, m={m}, otros={others}")
    i2, rest = others[0], others[1:]
    return BracketRewriting(
        "lie-intercambio",
        _lie(l, [l, *others], n),
        ((1, _lie(m, [l, i2], n), _lie(l, [m, *rest], n)),),
        ((1, _lie(m, [m, *rest, i2], n)),),
    )


def lie_jacobi_swap(l: int, others: Sequence[int], j: int, m: int, n: int) -> BracketRewriting:
    """Intercambia dos letras consecutivas de [x_l, x_i2, ...] modulo un corchete (1, k-1)."""
    others = tuple(others)
    if l in others or m in others or m == l or not 0 <= j < len(others) - 1:
        raise IdentidadNoAplicableException("lie-jacobi", f"l={l}, m={m}, j={j}")
    a, b = others[j], others[j + 1]
    swapped = others[:j] + (b, a) + others[j + 2 :]
    return BracketRewriting(
        "lie-jacobi",
        _lie(l, [l, *others], n),
        ((1, _lie(m, [a, b], n), _lie(l, [l, *others[:j], m, *others[j + 2 :]], n)),),
        ((1, _lie(l, [l, *swapped], n)),),
    )


def lie_degree_zero(l: int, others: Sequence[int], m: int, n: int) -> BracketRewriting:
    """x_l^* (x) [x_l, ..., x_ik+1] = [x_m^* (x) x_ik+1, x_l^* (x) [x_l, ..., x_ik, x_m]]."""
    others = tuple(others)
    if not others or m == l or m in others[:-1] or others[-1] == l:
        raise IdentidadNoAplicableException("lie-grado0", f"l={l}, m={m}, otros={others}")
    return BracketRewriting(
        "lie-grado0",
        _lie(l, [l, *others], n),
        ((1, _lie(m, [others[-1]], n), _lie(l, [l, *others[:-1], m], n)),),
    )
