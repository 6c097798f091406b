import pytest

from src.features.derivations.domain.entities import AssocDerivation
from src.features.derivations.domain.services.associative import (
    apply_assoc,
    assoc_basis,
    identity_derivation,
)
from src.features.free_algebra.domain.entities import TensorElement
from src.features.free_algebra.domain.exceptions import RangoIncompatibleException
from src.features.free_algebra.domain.services.tensor_algebra import cyclic_rotation
from src.features.symplectic.domain.exceptions import GeneroInvalidoException
from src.features.symplectic.domain.services.spiders import (
    a_basis,
    orbit_tensor,
    spider_to_tensor,
    symp_to_derivation,
)
from src.features.symplectic.domain.services.symplectic_form import (
    colors_to_letters,
    derivation_to_tensor,
    is_symplectic,
    letters_to_colors,
    omega0,
    tensor_to_derivation,
)


def is_invariant(t: TensorElement) -> bool:
    return cyclic_rotation(t) == t


class TestOmega0:
    """Pruebas para la clase simplectica."""

    def test_genero_uno(self):
        """Prueba omega_0 = a1 (x) b1 - b1 (x) a1."""
        assert omega0(1).as_dict() == {(1, -1): 1, (-1, 1): -1}

    def test_genero_dos(self):
        """Prueba que omega_0 tiene 2g terminos con coeficientes +-1."""
        terms = omega0(2).as_dict()
        assert len(terms) == 4
        assert sorted(terms.values()) == [-1, -1, 1, 1]

    def test_genero_invalido(self):
        """Prueba que g >= 1."""
        with pytest.raises(GeneroInvalidoException):
            omega0(0)

    def test_letras(self):
        """Prueba el paso a letras a_i = i, b_i = g + i."""
        assert colors_to_letters(omega0(2), 2).as_dict() == {
            (1, 3): 1,
            (3, 1): -1,
            (2, 4): 1,
            (4, 2): -1,
        }
        assert letters_to_colors(colors_to_letters(omega0(2), 2), 2) == omega0(2)

    def test_anulado_por_a_g(self):
        """Prueba D(omega_0) = 0 para toda la base de a_2(1)."""
        letters = colors_to_letters(omega0(2), 2)
        for spider in a_basis(2, 1):
            assert apply_assoc(symp_to_derivation(orbit_tensor(spider)), letters).is_zero()


class TestIsSymplectic:
    """Pruebas para la condicion D(omega_0) = 0."""

    def test_elemento_diagonal(self):
        """Prueba que a1 -> a1, b1 -> -b1 es simplectico."""
        D = AssocDerivation.from_mapping({(1, (1,)): 1, (2, (2,)): -1}, rank=2, degree=0)
        assert is_symplectic(D, 1)

    def test_identidad(self):
        """Prueba que la identidad no lo es y escala omega_0 por 2."""
        identity = identity_derivation(2)
        assert not is_symplectic(identity, 1)
        letters = colors_to_letters(omega0(1), 1)
        assert apply_assoc(identity, letters) == letters * 2

    def test_rango_incompatible(self):
        """Prueba que el rango debe ser 2g."""
        with pytest.raises(RangoIncompatibleException):
            is_symplectic(identity_derivation(3), 1)

    @pytest.mark.parametrize("k", [0, 1, 2])
    def test_aranas(self, k):
        """Prueba que toda arana da una derivacion simplectica en g=2."""
        for spider in a_basis(2, k):
            assert is_symplectic(symp_to_derivation(spider_to_tensor(spider)), 2)

    @pytest.mark.parametrize("k", [0, 1, 2])
    def test_equivale_a_invariancia(self, k):
        """Prueba simplectico <=> tensor invariante sobre toda la base de Der(T(H))(k), g=2."""
        for D in assoc_basis(4, k):
            assert is_symplectic(D, 2) == is_invariant(derivation_to_tensor(D))

    def test_equivale_a_invariancia_aleatorio(self, rng):
        """Prueba la equivalencia en sumas de una arana y un generador."""
        spiders = a_basis(2, 1)
        basis = assoc_basis(4, 1)
        for _ in range(100):
            D = symp_to_derivation(spider_to_tensor(rng.choice(spiders)))
            D = D + rng.choice(basis).scale(rng.choice([0, 1]))
            assert is_symplectic(D, 2) == is_invariant(derivation_to_tensor(D))


class TestConversions:
    """Pruebas para el paso tensor <-> derivacion."""

    def test_ida_y_vuelta(self, rng):
        """Prueba derivation_to_tensor(tensor_to_derivation(t)) = t."""
        for _ in range(50):
            t = TensorElement.from_pairs(
                (tuple(rng.choice([1, -1, 2, -2]) for _ in range(3)), rng.randint(-2, 2))
                for _ in range(4)
            )
            if t.is_zero():
                continue
            assert derivation_to_tensor(tensor_to_derivation(t, 2)) == t

    def test_signo(self):
        """Prueba que a1 (x) b1 es b1 -> b1 y b1 (x) a1 es a1 -> -a1."""
        D = tensor_to_derivation(TensorElement.from_mapping({(1, -1): 1, (-1, 1): 1}), 1)
        assert D.as_dict() == {(2, (2,)): 1, (1, (1,)): -1}

    def test_cero_con_grado(self):
        """Prueba que el tensor nulo necesita el grado."""
        assert tensor_to_derivation(TensorElement(), 2, degree=1).degree == 1
        with pytest.raises(GeneroInvalidoException):
            tensor_to_derivation(TensorElement(), 2)
