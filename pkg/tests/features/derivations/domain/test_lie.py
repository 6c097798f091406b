import pytest

from src.features.derivations.domain.entities import LieDerivation, SymmetricMonomial
from src.features.derivations.domain.exceptions import IndiceNoAdmisibleException
from src.features.derivations.domain.services.associative import bracket_assoc
from src.features.derivations.domain.services.lie import (
    apply_lie,
    bracket_lie_der,
    lie_der_basis,
    lie_der_basis_keys,
    lie_der_dimension,
    lie_der_to_assoc,
    phi_k,
    phi_k_with_index,
    trace_tr_k,
)
from src.features.free_algebra.domain.entities import LieElement
from src.features.free_algebra.domain.exceptions import RangoInvalidoException
from src.features.free_algebra.domain.services.lie_algebra import left_normed_bracket, lie_bracket


def lie_der(dual, letters, n):
    element = left_normed_bracket(letters, n)
    return LieDerivation.from_mapping(
        {(dual, w): c for w, c in element.terms}, rank=n, degree=len(letters) - 1
    )


def random_lie_der(rng, n, k, size=3):
    keys = list(lie_der_basis_keys(n, k))
    return LieDerivation.from_pairs(
        ((rng.choice(keys), rng.randint(-2, 2)) for _ in range(size)), rank=n, degree=k
    )


def monomials(n, k):
    if k == 0:
        return [()]
    return [
        (i, *rest)
        for i in range(1, n + 1)
        for rest in monomials(n, k - 1)
        if not rest or i <= rest[0]
    ]


class TestBracketLieDer:
    """Pruebas para el corchete de derivaciones de L_n."""

    def test_ejemplo(self):
        """Prueba [x3^* [x1,x2], x3^* [x3,x1]] = x3^* [x1,x2,x1]."""
        F = lie_der(3, [1, 2], 3)
        G = lie_der(3, [3, 1], 3)
        assert bracket_lie_der(F, G) == lie_der(3, [1, 2, 1], 3)

    def test_autocorchete(self, rng):
        """Prueba [F, F] = 0."""
        for _ in range(30):
            F = random_lie_der(rng, 3, rng.randint(0, 2))
            assert bracket_lie_der(F, F).is_zero()

    def test_jacobi(self, rng):
        """Prueba Jacobi en ternas aleatorias de grados (1, 1, 2)."""
        for _ in range(500):
            F, G = random_lie_der(rng, 3, 1), random_lie_der(rng, 3, 1)
            H = random_lie_der(rng, 3, 2)
            jacobi = (
                bracket_lie_der(bracket_lie_der(F, G), H)
                + bracket_lie_der(bracket_lie_der(G, H), F)
                + bracket_lie_der(bracket_lie_der(H, F), G)
            )
            assert jacobi.is_zero()

    def test_coincide_con_el_caso_asociativo(self, rng):
        """Prueba que la inclusion en Der(T(H_n)) respeta el corchete."""
        for _ in range(100):
            F = random_lie_der(rng, 3, rng.randint(0, 2))
            G = random_lie_der(rng, 3, rng.randint(0, 2))
            assert lie_der_to_assoc(bracket_lie_der(F, G)) == bracket_assoc(
                lie_der_to_assoc(F), lie_der_to_assoc(G)
            )

    def test_aplicacion_es_derivacion(self, rng):
        """Prueba F[a, b] = [Fa, b] + [a, Fb]."""
        for _ in range(50):
            F = random_lie_der(rng, 3, 1)
            a, b = LieElement.generator(rng.randint(1, 3), 3), left_normed_bracket([1, 2], 3)
            left = apply_lie(F, lie_bracket(a, b))
            right = lie_bracket(apply_lie(F, a), b) + lie_bracket(a, apply_lie(F, b))
            assert left == right


class TestTrace:
    """Pruebas para la traza tr_k."""

    def test_ejemplo(self):
        """Prueba tr2(x3^* [x3,x1,x2]) = x1x2."""
        trace = trace_tr_k(lie_der(3, [3, 1, 2], 3))
        assert trace.terms == ((SymmetricMonomial.of((1, 2)), 1),)

    def test_dual_ausente(self):
        """Prueba tr2(x1^* [x2,x3,x2]) = 0."""
        assert trace_tr_k(lie_der(1, [2, 3, 2], 3)).is_zero()

    @pytest.mark.parametrize("p,q", [(1, 1), (1, 2)])
    def test_se_anula_en_corchetes_exhaustivo(self, p, q):
        """Prueba tr_k([F, G]) = 0 sobre toda la base en n=3."""
        for F in lie_der_basis(3, p):
            for G in lie_der_basis(3, q):
                assert trace_tr_k(bracket_lie_der(F, G)).is_zero()

    @pytest.mark.parametrize("n", [4, 5])
    def test_se_anula_en_corchetes_aleatorio(self, rng, n):
        """Prueba tr_k([F, G]) = 0 con derivaciones aleatorias."""
        for _ in range(50):
            F = random_lie_der(rng, n, rng.randint(1, 2))
            G = random_lie_der(rng, n, rng.randint(1, 2))
            assert trace_tr_k(bracket_lie_der(F, G)).is_zero()


class TestPhi:
    """Pruebas para la seccion Phi_k."""

    def test_indice_minimo(self):
        """Prueba Phi(x1x2) = x3^* [x3,x1,x2] en n=4."""
        assert phi_k(SymmetricMonomial.of((1, 2)), 4) == lie_der(3, [3, 1, 2], 4)

    def test_traza_por_phi_es_identidad(self):
        """Prueba tr_k o Phi_k = id en todos los monomios de n=4, k=2."""
        for letters in monomials(4, 2):
            m = SymmetricMonomial.of(letters)
            assert trace_tr_k(phi_k(m, 4)).terms == ((m, 1),)

    def test_sin_indice_admisible(self):
        """Prueba que falla si el monomio usa todas las letras."""
        with pytest.raises(RangoInvalidoException):
            phi_k(SymmetricMonomial.of((1, 2)), 2)

    @pytest.mark.parametrize("letters, n", [((1, 1), 3), ((1, 2, 3), 4), ((2, 2, 2), 4)])
    def test_rango_insuficiente(self, letters, n):
        """Prueba que n < k + 2 se rechaza aunque quede una letra libre."""
        with pytest.raises(RangoInvalidoException):
            phi_k(SymmetricMonomial.of(letters), n)

    def test_rango_minimo(self):
        """Prueba que n = k + 2 basta con letras repetidas."""
        m = SymmetricMonomial.of((1, 1))
        assert trace_tr_k(phi_k(m, 4)).terms == ((m, 1),)

    def test_indice_no_admisible_explicito(self):
        """Prueba que un indice l dentro del monomio se rechaza."""
        with pytest.raises(IndiceNoAdmisibleException):
            phi_k_with_index(SymmetricMonomial.of((1, 2)), 4, 2)

    def test_otro_indice_misma_traza(self):
        """Prueba que cambiar l no cambia la traza."""
        m = SymmetricMonomial.of((1, 1))
        assert trace_tr_k(phi_k_with_index(m, 4, 2)) == trace_tr_k(phi_k_with_index(m, 4, 4))


class TestLieDerBasis:
    """Pruebas para la base de Der(L_n)(k)."""

    @pytest.mark.parametrize("n,k,expected", [(4, 2, 80), (3, 1, 9), (2, 0, 4)])
    def test_dimension(self, n, k, expected):
        """Prueba dim Der(L_n)(k) = n Witt(n, k+1)."""
        assert lie_der_dimension(n, k) == expected
        assert len(list(lie_der_basis_keys(n, k))) == expected
