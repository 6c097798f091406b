import pytest

from src.features.free_algebra.domain.entities import TensorElement
from src.features.homology.domain.entities import RepresentationModule
from src.features.homology.domain.exceptions import ModuloInvalidoException
from src.features.homology.domain.services.coinvariants import (
    coinvariants,
    exterior_cube,
    exterior_square,
    exterior_square_mod_omega,
    sp_coinvariants,
    sp_generators,
    symmetric_cube,
    trivial_module,
)


class TestModules:
    """Pruebas para los modulos de potencias tensoriales de H."""

    @pytest.mark.parametrize(
        "builder,expected",
        [
            (trivial_module, 1),
            (exterior_square, 6),
            (exterior_square_mod_omega, 5),
            (symmetric_cube, 20),
            (exterior_cube, 4),
        ],
    )
    def test_dimensiones_genero_dos(self, builder, expected):
        """Prueba las dimensiones de los modulos para g=2."""
        assert builder(2).dimension == expected

    def test_generadores_de_sp(self):
        """Prueba que sp_4 tiene 10 generadores de grado 0."""
        generators = sp_generators(2)
        assert len(generators) == 10
        assert all(g.degree == 0 for g in generators)


class TestCoinvariants:
    """Pruebas para las sp-coinvariantes."""

    def test_modulo_trivial(self):
        """Prueba que el modulo trivial de dimension 1 sobrevive."""
        [result] = sp_coinvariants(["trivial"], 2)
        assert result.dimension == 1

    def test_potencia_exterior(self):
        """Prueba que en wedge^2 H solo sobrevive la recta de omega_0."""
        [result] = sp_coinvariants(["wedge2"], 2)
        assert result.module_dimension == 6
        assert result.dimension == 1

    def test_se_anulan_en_genero_dos(self):
        """Prueba que S^3 H, wedge^3 H y wedge^2 H / omega_0 no tienen coinvariantes."""
        results = sp_coinvariants(["sym3", "wedge3", "wedge2/omega0"], 2)
        assert [r.dimension for r in results] == [0, 0, 0]

    @pytest.mark.slow
    def test_se_anulan_en_genero_tres(self):
        """Prueba lo mismo en g=3."""
        results = sp_coinvariants(["sym3", "wedge3", "wedge2/omega0"], 3)
        assert [r.dimension for r in results] == [0, 0, 0]

    def test_accion_fuera_del_modulo(self):
        """Prueba que un subespacio no invariante se rechaza."""
        module = RepresentationModule("a1a1", 1, (TensorElement.word(1, 1),))
        with pytest.raises(ModuloInvalidoException):
            coinvariants(module, sp_generators(1))

    def test_base_no_libre(self):
        """Prueba que una base con vectores repetidos se rechaza."""
        element = TensorElement.word(1, 2) - TensorElement.word(2, 1)
        module = RepresentationModule("repetida", 1, (element, element))
        with pytest.raises(ModuloInvalidoException):
            coinvariants(module, sp_generators(1))
