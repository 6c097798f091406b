"""Derivaciones simplecticas del algebra de Lie libre: h_{g,1}(k) como nucleo exacto."""

import logging
from fractions import Fraction
from typing import Any

from sympy import Matrix

from src.features.derivations.domain.entities import DerivationKey, LieDerivation
from src.features.derivations.domain.services.lie import (
    apply_lie,
    lie_der_basis,
    lie_der_basis_keys,
    trace_tr_k,
)
from src.features.free_algebra.domain.entities import Coefficient, LieElement
from src.features.free_algebra.domain.services.lyndon import lyndon_words
from src.features.symplectic.domain.entities import SympLieDerivation
from src.features.symplectic.domain.exceptions import GeneroInvalidoException
from src.infrastructure.cache import cached

logger = logging.getLogger(__name__)

KernelTerms = tuple[tuple[DerivationKey, Coefficient], ...]


def omega0_lie(genus: int) -> LieElement:
    """omega_0 = sum_i [a_i, b_i] en L_{2g}(2), con a_i = x_i y b_i = x_{g+i}."""
    if genus < 1:
        raise GeneroInvalidoException(genus)
    terms = {(i, genus + i): 1 for i in range(1, genus + 1)}
    return LieElement.from_mapping(terms, rank=2 * genus)


def is_symplectic_lie(derivation: LieDerivation) -> bool:
    if derivation.rank % 2:
        return False
    return apply_lie(derivation, omega0_lie(derivation.rank // 2)).is_zero()


def _to_fraction(value: Any) -> Fraction:
    return Fraction(int(value.p), int(value.q))


@cached(key_prefix="hg1:")
def _kernel(genus: int, degree: int) -> tuple[KernelTerms, ...]:
    n = 2 * genus
    keys = list(lie_der_basis_keys(n, degree))
    rows = {w: i for i, w in enumerate(lyndon_words(n, degree + 2))}
    omega = omega0_lie(genus)
    matrix = Matrix.zeros(len(rows), len(keys))
    for j, derivation in enumerate(lie_der_basis(n, degree)):
        for w, c in apply_lie(derivation, omega).terms:
            matrix[rows[w], j] = c
    kernel = []
    for vector in matrix.nullspace():
        combination = LieDerivation.from_mapping(
            {keys[j]: _to_fraction(x) for j, x in enumerate(vector) if x != 0},
            rank=n,
            degree=degree,
        )
        integral, _ = combination.scale_to_integers()
        kernel.append(integral.terms)
    logger.info(f"h_{genus},1({degree}): nucleo de dimension {len(kernel)} en {len(keys)} columnas")
    return tuple(kernel)


def h_basis(genus: int, degree: int) -> list[SympLieDerivation]:
    """Base del nucleo de D -> D(omega_0) sobre Der(L_{2g})(k), con coeficientes enteros."""
    if genus < 1 or degree < 1:
        raise GeneroInvalidoException(genus, degree)
    return [
        SympLieDerivation(terms=terms, rank=2 * genus, degree=degree)
        for terms in _kernel(genus, degree)
    ]


def h_dimension(genus: int, degree: int) -> int:
    return len(h_basis(genus, degree))


def trace_image_rank(genus: int, degree: int) -> int:
    """Rango de tr_k restringida a h_{g,1}(k). Es un valor exploratorio."""
    traces = [trace_tr_k(d) for d in h_basis(genus, degree)]
    monomials = sorted({m for t in traces for m, _ in t.terms})
    if not monomials:
        return 0
    index = {m: i for i, m in enumerate(monomials)}
    matrix = Matrix.zeros(len(traces), len(monomials))
    for i, t in enumerate(traces):
        for m, c in t.terms:
            matrix[i, index[m]] = c
    return int(matrix.rank())
