from fractions import Fraction

import pytest

from src.features.derivations.domain.exceptions import GradoInvalidoException
from src.features.free_algebra.domain.entities import LinearCombination
from src.features.symplectic.domain.entities import SignedPermutation, Spider
from src.features.symplectic.domain.exceptions import GeneroIncompatibleException
from src.features.symplectic.domain.services.spiders import (
    a_basis,
    a_dimension,
    bracket_spider,
    bracket_spider_combinations,
    bracket_symp,
    combination_to_tensor,
    normalize_chain_colors,
    orbit_coordinates,
    orbit_tensor,
    recolor,
    recolor_combination,
    sp_action,
    spider_to_tensor,
    spider_weight,
    tensor_to_symp,
)

EIGHT_LEG_SPIDER = (1, 4, -2, -1, 3, -1, 2, 1)


def random_combination(rng, genus, degree, size=3):
    basis = a_basis(genus, degree)
    return LinearCombination.from_pairs(
        (rng.choice(basis), rng.randint(-2, 2)) for _ in range(size)
    )


def single(spider, coefficient=1):
    return LinearCombination.from_mapping({spider: coefficient})


class TestSpiderToTensor:
    """Pruebas para la suma de rotaciones."""

    def test_dos_patas(self):
        """Prueba S(1,-1) = a1 (x) b1 + b1 (x) a1."""
        assert spider_to_tensor(Spider((1, -1), 1)).as_dict() == {(1, -1): 1, (-1, 1): 1}

    def test_palabra_fija(self):
        """Prueba S(1,1,1) = 3 a1 (x) a1 (x) a1."""
        assert spider_to_tensor(Spider((1, 1, 1), 1)).as_dict() == {(1, 1, 1): 3}

    def test_orbita_primitiva(self):
        """Prueba que la base usa cada rotacion distinta una vez."""
        assert orbit_tensor(Spider((1, 1, 1), 1)).as_dict() == {(1, 1, 1): 1}
        spider = Spider(EIGHT_LEG_SPIDER, 4)
        assert spider_to_tensor(spider) == orbit_tensor(spider)

    def test_vuelta_a_aranas(self):
        """Prueba tensor_to_symp como inversa de combination_to_tensor."""
        combination = single(Spider((1, 1), 1), 3) + single(Spider((1, -1), 1), -1)
        tensor = combination_to_tensor(combination, 1, 0)
        assert tensor_to_symp(tensor) == combination

    def test_coordenadas_en_orbitas(self):
        """Prueba S(1,1) = 2 * orbita."""
        assert orbit_coordinates(single(Spider((1, 1), 1))) == {Spider((1, 1), 1): 2}
        tensor = orbit_tensor(Spider((1, -1, 1, -1), 1))
        assert tensor_to_symp(tensor).as_dict() == {Spider((1, -1, 1, -1), 1): Fraction(1, 2)}


class TestBracketSpider:
    """Pruebas para el corchete de aranas."""

    def test_sin_pares_opuestos(self):
        """Prueba [S(1,2,3), S(1,2,3)] = 0."""
        s = Spider((1, 2, 3), 3)
        assert bracket_spider(s, s).is_zero()

    def test_grado_cero(self):
        """Prueba [S(1,-1), S(1,1)] = -2 S(1,1)."""
        result = bracket_spider(Spider((1, -1), 1), Spider((1, 1), 1))
        assert result.as_dict() == {Spider((1, 1), 1): -2}

    def test_separacion(self):
        """Prueba [S(5,1,2), S(3,4,-5)] = S(1,2,3,4)."""
        result = bracket_spider(Spider((5, 1, 2), 6), Spider((3, 4, -5), 6))
        assert result.as_dict() == {Spider((1, 2, 3, 4), 6): 1}

    def test_generos_distintos(self):
        """Prueba que no se mezclan generos."""
        with pytest.raises(GeneroIncompatibleException):
            bracket_spider(Spider((1, -1), 1), Spider((1, -1), 2))

    @pytest.mark.parametrize("p,q", [(0, 1), (1, 1), (0, 2)])
    def test_coincide_con_el_corchete_tensorial(self, p, q):
        """Prueba el corchete de aranas contra Der(T(H)) sobre todos los pares de g=2."""
        for s1 in a_basis(2, p):
            for s2 in a_basis(2, q):
                expected = bracket_symp(spider_to_tensor(s1), spider_to_tensor(s2))
                assert combination_to_tensor(bracket_spider(s1, s2), 2, p + q) == expected

    @pytest.mark.parametrize("genus", [2, 3])
    def test_antisimetria_y_jacobi(self, rng, genus):
        """Prueba antisimetria y Jacobi con combinaciones aleatorias."""
        for _ in range(30):
            a = random_combination(rng, genus, 1)
            b = random_combination(rng, genus, 1)
            c = random_combination(rng, genus, 0)
            ab = bracket_spider_combinations(a, b)
            assert (ab + bracket_spider_combinations(b, a)).is_zero()
            jacobi = (
                bracket_spider_combinations(ab, c)
                + bracket_spider_combinations(bracket_spider_combinations(b, c), a)
                + bracket_spider_combinations(bracket_spider_combinations(c, a), b)
            )
            assert jacobi.is_zero()

    def test_cerrado(self, rng):
        """Prueba que [a_g(p), a_g(q)] es invariante (el constructor lo verifica)."""
        for _ in range(30):
            a = random_combination(rng, 2, 1)
            b = random_combination(rng, 2, 2)
            combination_to_tensor(bracket_spider_combinations(a, b), 2, 3)


class TestBasis:
    """Pruebas para la base de a_g(k)."""

    @pytest.mark.parametrize(
        "genus,degree,expected", [(2, 1, 24), (1, 0, 3), (2, 2, 70), (6, 3, 49776)]
    )
    def test_dimension(self, genus, degree, expected):
        """Prueba la formula de Burnside en los valores conocidos."""
        assert a_dimension(genus, degree) == expected

    @pytest.mark.parametrize("genus", [1, 2, 3])
    @pytest.mark.parametrize("degree", [0, 1, 2, 3, 4])
    def test_coincide_con_burnside(self, genus, degree):
        """Prueba |a_basis| = Burnside y que no hay repetidos."""
        basis = a_basis(genus, degree)
        assert len(basis) == len(set(basis)) == a_dimension(genus, degree)

    def test_suma_de_cubos(self):
        """Prueba dim a_2(1) = dim S^3 H + dim wedge^3 H = 20 + 4."""
        assert len(a_basis(2, 1)) == 20 + 4


class TestSpAction:
    """Pruebas para la accion de sp = a_g(0)."""

    def test_pesos(self):
        """Prueba que S(i,-i) actua como -h_i, con h_i el peso en el indice i."""
        D = spider_to_tensor(Spider((1, 1, 2), 2))
        assert spider_weight(Spider((1, 1, 2), 2)) == (2, 1)
        for i, weight in ((1, 2), (2, 1)):
            X = spider_to_tensor(Spider((i, -i), 2))
            assert sp_action(X, D) == D.scale(-weight)

    def test_peso_nulo(self):
        """Prueba que S(1,-1,2,-2) tiene peso cero."""
        D = spider_to_tensor(Spider((1, -1, 2, -2), 2))
        X = spider_to_tensor(Spider((1, -1), 2))
        assert sp_action(X, D).is_zero()

    def test_cerrado_en_grado_cero(self):
        """Prueba que sp actua sobre si misma."""
        for s1 in a_basis(1, 0):
            for s2 in a_basis(1, 0):
                assert sp_action(orbit_tensor(s1), orbit_tensor(s2)).degree == 0

    def test_grado_incorrecto(self):
        """Prueba que X debe tener grado 0."""
        D = spider_to_tensor(Spider((1, 1, 1), 1))
        with pytest.raises(GradoInvalidoException):
            sp_action(D, D)

    def test_es_derivacion(self, rng):
        """Prueba X.[D1, D2] = [X.D1, D2] + [D1, X.D2]."""
        degree_zero = a_basis(2, 0)
        degree_one = a_basis(2, 1)
        for _ in range(30):
            X = orbit_tensor(rng.choice(degree_zero))
            D1 = orbit_tensor(rng.choice(degree_one))
            D2 = orbit_tensor(rng.choice(degree_one))
            left = sp_action(X, bracket_symp(D1, D2))
            right = bracket_symp(sp_action(X, D1), D2) + bracket_symp(D1, sp_action(X, D2))
            assert left == right


class TestRecolor:
    """Pruebas para los recoloreos de Sp(2g, Z)."""

    def test_compatible_con_corchete(self, rng):
        """Prueba phi([S1, S2]) = [phi S1, phi S2]."""
        phi = SignedPermutation(3, (2, 3, 1), (True, False, True))
        for _ in range(30):
            a = random_combination(rng, 3, 1)
            b = random_combination(rng, 3, 1)
            left = recolor_combination(bracket_spider_combinations(a, b), phi)
            right = bracket_spider_combinations(
                recolor_combination(a, phi), recolor_combination(b, phi)
            )
            assert left == right

    def test_signo(self):
        """Prueba que b_i -> -a_j aporta un signo por pata."""
        phi = SignedPermutation(1, (1,), (True,))
        assert recolor(Spider((1, -1, -1), 1), phi) == (1, Spider((-1, 1, 1), 1))

    def test_normaliza_cadena(self):
        """Prueba que S(3,-5,-3,5) se recolorea a -S(1,2,-1,-2)."""
        sign, image, _ = normalize_chain_colors(Spider((3, -5, -3, 5), 5))
        assert (sign, image) == (-1, Spider((1, 2, -1, -2), 5))

    def test_normaliza_desde_otra_pata(self):
        """Prueba que `start` cambia la pata desde la que se numera."""
        spider = Spider((2, 5, -2, 4, -5, -1, -4, 1), 9)
        _, canonical, _ = normalize_chain_colors(spider)
        sign, image, _ = normalize_chain_colors(spider, spider.colors.index(2))
        assert (sign, image) == (-1, Spider((1, 2, -1, 3, -2, 4, -3, -4), 9))
        assert canonical != image
