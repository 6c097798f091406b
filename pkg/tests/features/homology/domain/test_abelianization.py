import pytest

from src.config.settings import settings
from src.domain.shared.custom_types import AlgebraKind, Mode, Ring
from src.domain.shared.exceptions import EXIT_ORACLE_DISAGREEMENT, EXIT_RANGE_GUARD
from src.features.homology.domain.exceptions import (
    AlgebraNoSoportadaException,
    CorridaPesadaException,
    EnsambladoDiscordanteException,
    FueraDeRangoException,
)
from src.features.homology.domain.services.abelianization import (
    c13_projection_check,
    generation_profile,
    h1_weight,
    in_bracket_image,
)
from src.features.homology.domain.services.coinvariants import (
    coinvariants,
    derivation_module,
    full_mode_parts,
)
from src.features.homology.domain.services.digests import ColumnDigest
from src.features.homology.domain.services.span import default_partitions
from src.features.symplectic.domain.services.spiders import (
    a_basis,
    bracket_spider,
    combination_to_tensor,
    spider_to_tensor,
)


class TestH1Plus:
    """Pruebas para H1 de la parte positiva."""

    @pytest.mark.parametrize("n", [2, 3])
    def test_assoc_peso_dos(self, n):
        """Prueba que H1(Der+(T(H_n)))_2 es libre de rango n^2 sin torsion."""
        result = h1_weight(AlgebraKind.ASSOC, n, 2, Mode.PLUS, Ring.Z)
        assert result.free_rank == n * n
        assert result.torsion == ()
        assert result.description() == f"Z^{n * n}"

    def test_lie_peso_dos(self):
        """Prueba que H1(Der+(L_4))_2 es libre de rango C(5,2) = 10."""
        result = h1_weight(AlgebraKind.LIE, 4, 2, Mode.PLUS, Ring.Z)
        assert result.free_rank == 10
        assert result.torsion == ()

    @pytest.mark.slow
    def test_lie_peso_tres(self):
        """Prueba que H1(Der+(L_5))_3 es libre de rango C(7,3) = 35."""
        result = h1_weight(AlgebraKind.LIE, 5, 3, Mode.PLUS, Ring.Z)
        assert result.free_rank == 35
        assert result.torsion == ()

    def test_assoc_peso_tres_se_anula(self):
        """Prueba que los corchetes (2,1) generan Der(T(H_3))(3)."""
        result = h1_weight(AlgebraKind.ASSOC, 3, 3, Mode.PLUS, Ring.Q, partitions=[(2, 1)])
        assert result.free_rank == 0
        assert result.rank == 3**5

    def test_symp_peso_dos(self):
        """Prueba que H1(a_2+)_2 tiene dimension 2g^2 - g - 1 = 5."""
        result = h1_weight(AlgebraKind.SYMP, 2, 2, Mode.PLUS, Ring.Q)
        assert result.free_rank == 5
        assert result.description() == "Q^5"

    def test_peso_uno_sin_corchetes(self):
        """Prueba que en peso 1 nada se cocienta en la parte positiva."""
        result = h1_weight(AlgebraKind.SYMP, 2, 1, Mode.PLUS, Ring.MODP)
        assert result.partitions == ()
        assert result.free_rank == 24

    def test_modular_coincide(self):
        """Prueba que los tres primos dan el mismo resultado que Q."""
        modular = h1_weight(AlgebraKind.SYMP, 2, 2, Mode.PLUS, Ring.MODP)
        assert modular.free_rank == 5
        assert {rank for _, rank in modular.ranks_by_prime} == {modular.rank}

    def test_lie_symp(self):
        """Prueba que h_{2,1} en peso 2 se calcula en coordenadas de Der(L_4)."""
        result = h1_weight(AlgebraKind.LIE_SYMP, 2, 2, Mode.PLUS, Ring.Q)
        assert 0 <= result.free_rank <= result.target_dimension

    def test_symp_sobre_z(self):
        """Prueba que a_g no admite coeficientes enteros."""
        with pytest.raises(AlgebraNoSoportadaException):
            h1_weight(AlgebraKind.SYMP, 2, 2, Mode.PLUS, Ring.Z)

    def test_particion_invalida(self):
        """Prueba que (0,k) no se admite en modo plus."""
        with pytest.raises(FueraDeRangoException):
            h1_weight(AlgebraKind.ASSOC, 2, 2, Mode.PLUS, Ring.Q, partitions=[(0, 2)])

    def test_corrida_pesada(self, monkeypatch):
        """Prueba que por encima del umbral hace falta heavy."""
        monkeypatch.setattr(settings, "HEAVY_COLUMN_THRESHOLD", 10)
        with pytest.raises(CorridaPesadaException) as excinfo:
            h1_weight(AlgebraKind.ASSOC, 2, 2, Mode.PLUS, Ring.Q)
        assert excinfo.value.exit_code == EXIT_RANGE_GUARD
        result = h1_weight(AlgebraKind.ASSOC, 2, 2, Mode.PLUS, Ring.Q, heavy=True)
        assert result.free_rank == 4

    def test_digest_de_columnas(self):
        """Prueba que el digest cuenta las columnas consumidas."""
        digest = ColumnDigest()
        result = h1_weight(AlgebraKind.ASSOC, 2, 2, Mode.PLUS, Ring.Z, column_digest=digest)
        assert digest.columns == result.column_count
        assert len(digest.hexdigest()) == 64


class TestH1Full:
    """Pruebas para H1 del algebra completa."""

    @pytest.mark.parametrize("n", [2, 3])
    def test_peso_cero_es_z(self, n):
        """Prueba H1(Der(T(H_n)))_0 = Z por el conmutador de gl_n(Z)."""
        result = h1_weight(AlgebraKind.ASSOC, n, 0, Mode.FULL, Ring.Z)
        assert result.description() == "Z"
        assert result.degree_zero_part == 1
        assert result.coinvariant_part == 0

    @pytest.mark.parametrize("n", [2, 3])
    def test_peso_uno_se_anula(self, n):
        """Prueba que en peso 1 el modo full no deja nada."""
        result = h1_weight(AlgebraKind.ASSOC, n, 1, Mode.FULL, Ring.Z)
        assert result.free_rank == 0
        assert result.torsion == ()
        assert result.plus_free_rank == n**3

    def test_peso_dos_se_anula(self):
        """Prueba que en peso 2 las coinvariantes de s(H (x) H) se anulan."""
        result = h1_weight(AlgebraKind.ASSOC, 2, 2, Mode.FULL, Ring.Q)
        assert result.free_rank == 0
        assert result.plus_free_rank == 4
        assert result.coinvariant_part == 0

    @pytest.mark.parametrize("degree", [0, 1, 2])
    def test_symp_genero_dos(self, degree):
        """Prueba que H1(a_2) se anula en pesos 0, 1 y 2."""
        result = h1_weight(AlgebraKind.SYMP, 2, degree, Mode.FULL, Ring.Q)
        assert result.free_rank == 0

    def test_plus_no_reporta_partes(self):
        """Prueba que en modo plus no hay descomposicion."""
        result = h1_weight(AlgebraKind.ASSOC, 2, 2, Mode.PLUS, Ring.Z)
        assert result.coinvariant_part is None
        assert result.degree_zero_part is None
        assert result.plus_free_rank is None


class TestFullModeParts:
    """Pruebas para las partes del modo full calculadas como coinvariantes."""

    @pytest.mark.parametrize(
        "kind, size, degree, expected",
        [
            (AlgebraKind.ASSOC, 2, 0, (0, 1)),
            (AlgebraKind.ASSOC, 2, 1, (0, 0)),
            (AlgebraKind.ASSOC, 2, 2, (0, 0)),
            (AlgebraKind.SYMP, 2, 0, (0, 0)),
            (AlgebraKind.SYMP, 2, 1, (0, 0)),
            (AlgebraKind.SYMP, 2, 2, (0, 0)),
        ],
    )
    def test_partes_y_suma(self, kind, size, degree, expected):
        """Prueba que las partes coinciden con el rango directo del modo full."""
        partitions = default_partitions(degree, Mode.FULL)
        assert full_mode_parts(kind, size, degree, partitions) == expected
        result = h1_weight(kind, size, degree, Mode.FULL, Ring.Q)
        assert (result.coinvariant_part, result.degree_zero_part) == expected
        assert result.coinvariant_part + result.degree_zero_part == result.free_rank

    def test_modulo_de_derivaciones(self):
        """Prueba la base, las relaciones y los generadores de Der(T(H_2))(2)."""
        module, generators, _ = derivation_module(AlgebraKind.ASSOC, 2, 2, [(0, 2), (1, 1)])
        assert len(module.basis) == 16
        assert len(module.relations) == 28
        assert len(generators) == 4

    def test_sin_particion_cero_no_actua(self):
        """Prueba que sin (0, k) el modulo no tiene generadores y queda H1(g+)_k."""
        module, generators, act = derivation_module(AlgebraKind.ASSOC, 2, 2, [(1, 1)])
        assert generators == []
        assert coinvariants(module, generators, act).dimension == 4

    def test_lie_symp_no_tiene_grado_cero(self):
        """Prueba que lie-symp no arma el modulo del modo full."""
        with pytest.raises(AlgebraNoSoportadaException):
            derivation_module(AlgebraKind.LIE_SYMP, 2, 2, [(1, 1)])

    def test_discordancia(self, monkeypatch):
        """Prueba que si las partes no suman el rango directo se aborta con codigo 3."""
        monkeypatch.setattr(
            "src.features.homology.domain.services.abelianization.full_mode_parts",
            lambda *args: (1, 0),
        )
        with pytest.raises(EnsambladoDiscordanteException) as info:
            h1_weight(AlgebraKind.ASSOC, 2, 1, Mode.FULL, Ring.Q)
        assert info.value.exit_code == EXIT_ORACLE_DISAGREEMENT


class TestGenerationProfile:
    """Pruebas para el perfil de generacion."""

    def test_assoc_monotono(self):
        """Prueba que agregar particiones no baja el rango y que se alcanza el total."""
        rows = generation_profile(AlgebraKind.ASSOC, 2, 3)
        assert [row.degree for row in rows] == [2, 3, 3]
        for row in rows:
            assert row.rank <= row.full_rank
        assert rows[-1].spans_image

    def test_particiones_coinciden_en_grado_tres(self):
        """Prueba que en k=3 las dos filas eligen los mismos corchetes."""
        rows = generation_profile(AlgebraKind.ASSOC, 2, 3)
        assert rows[1].partitions == rows[2].partitions == ((1, 2),)
        assert rows[1].rank == rows[2].rank

    @pytest.mark.slow
    def test_lie_grado_uno_basta(self):
        """Prueba que en Der(L_5) los corchetes con grado 1 generan la imagen en k=3."""
        rows = generation_profile(AlgebraKind.LIE, 5, 3)
        assert all(row.spans_image for row in rows)
        assert rows[-1].target_dimension - rows[-1].rank == 35

    def test_rango_asociativo_completo(self):
        """Prueba que {(k-1,1),(k-2,2)} genera todo Der(T(H_3))(3)."""
        rows = generation_profile(AlgebraKind.ASSOC, 3, 3)
        assert rows[-1].rank == 3**5


class TestC13Projection:
    """Pruebas para la factorizacion de H1(a_g+)_2 por C13."""

    def test_genero_dos(self):
        """Prueba que la proyeccion anula corchetes, es suprayectiva y da 2g^2 - g - 1."""
        check = c13_projection_check(2)
        assert check.kills_brackets
        assert check.surjective
        assert check.h1_dimension == check.target_dimension == 5
        assert check.holds

    @pytest.mark.slow
    def test_genero_tres(self):
        """Prueba la misma factorizacion en g=3, con dimension 14."""
        check = c13_projection_check(3)
        assert check.holds
        assert check.h1_dimension == 14


class TestInBracketImage:
    """Pruebas para la pertenencia por rango a la imagen del corchete."""

    def test_un_corchete_pertenece(self):
        """Prueba que un corchete de grado 1 esta en la imagen."""
        basis = a_basis(2, 1)
        vector = combination_to_tensor(bracket_spider(basis[0], basis[7]), 2, 2)
        assert in_bracket_image(vector)

    def test_no_todas_pertenecen(self):
        """Prueba que alguna arana de grado 2 queda fuera (H1 no nulo)."""
        assert not all(in_bracket_image(spider_to_tensor(s)) for s in a_basis(2, 2))


@pytest.mark.heavy
class TestCorridaPesada:
    """Corrida de aceptacion en g=6, k=3."""

    def test_symp_genero_seis(self):
        """Prueba rango completo 49776 modulo tres primos con salida temprana."""
        result = h1_weight(AlgebraKind.SYMP, 6, 3, Mode.PLUS, Ring.MODP, heavy=True)
        assert result.target_dimension == 49776
        assert result.free_rank == 0
        assert result.early_exit
