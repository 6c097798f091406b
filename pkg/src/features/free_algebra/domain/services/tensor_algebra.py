from collections import defaultdict

from src.features.free_algebra.domain.entities import Coefficient, TensorElement, Word


def tensor_product(left: TensorElement, right: TensorElement) -> TensorElement:
    """Producto concatenacion en T(H)."""
    acc: dict[Word, Coefficient] = defaultdict(int)
    for u, a in left.terms:
        for v, b in right.terms:
            acc[u + v] += a * b
    return TensorElement.from_mapping(acc)


def commutator(left: TensorElement, right: TensorElement) -> TensorElement:
    """[X, Y] = X (x) Y - Y (x) X."""
    return tensor_product(left, right) - tensor_product(right, left)


def cyclic_rotation(t: TensorElement, steps: int = 1) -> TensorElement:
    """Rota cada palabra: la accion de sigma sobre H^(x)m, aplicada steps veces."""
    acc: dict[Word, Coefficient] = defaultdict(int)
    for w, c in t.terms:
        s = steps % len(w)
        acc[w[s:] + w[:s]] += c
    return TensorElement.from_mapping(acc)
