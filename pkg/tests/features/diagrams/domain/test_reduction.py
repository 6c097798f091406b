import pytest

from src.domain.shared.exceptions import EXIT_RANGE_GUARD
from src.features.diagrams.domain.entities import CertificationRoute
from src.features.diagrams.domain.exceptions import GeneroInsuficienteException
from src.features.diagrams.domain.services.audit import audit
from src.features.diagrams.domain.services.chord_diagrams import (
    chord_diagram_of,
    is_standard_form,
    multiplicity,
)
from src.features.diagrams.domain.services.reduction import (
    certify_in_bracket_image,
    configurations,
    read_configuration,
    reduce_to_standard,
)
from src.features.symplectic.domain.entities import Spider

EIGHT_LEG_SPIDER = (1, 4, -2, -1, 3, -1, 2, 1)


def random_spider(rng, genus, degree):
    colors = tuple(rng.choice((1, -1)) * rng.randint(1, genus) for _ in range(degree + 2))
    return Spider(colors, genus)


def check_certificate(certificate):
    audit(certificate)
    for term, _ in certificate.remainder:
        assert is_standard_form(chord_diagram_of(term)) is not None
    initial = multiplicity(chord_diagram_of(certificate.spider))
    assert certificate.max_multiplicity == initial
    assert certificate.max_backtracks <= initial


class TestConfigurations:
    """Pruebas para la lectura de configuraciones F_l."""

    def test_lectura(self):
        """Prueba la cadena, X e Y de una configuracion de nivel 2."""
        state = read_configuration((1, 2, -1, 3, 4, -2, 5), 0, 2)
        assert state.chain == (1, 2)
        assert state.inner == (3, 4)
        assert state.outer == (5,)
        assert state.colors == (1, 2, -1, 3, 4, -2, 5)

    def test_sin_cierre(self):
        """Prueba que sin -c_l no hay configuracion."""
        assert read_configuration((1, 2, -1, 3, 4, 5), 0, 2) is None

    def test_orden_por_nivel(self):
        """Prueba que las configuraciones salen de mayor a menor nivel."""
        states = configurations(Spider((1, 2, -1, 3, 4, -2, 5), 6))
        levels = [state.level for state in states]
        assert levels == sorted(levels, reverse=True)
        assert any(
            state.chain == (1, 2) and state.inner == (3, 4) and state.outer == (5,)
            for state in states
        )


class TestReduceToStandard:
    """Pruebas para la reduccion a forma estandar."""

    def test_separable(self):
        """Prueba que una arana separable es un solo corchete."""
        certificate = reduce_to_standard(Spider((1, -1, 2, -2, 3, -3), 7))
        assert len(certificate.brackets) == 1
        assert certificate.remainder == ()
        assert certificate.is_in_bracket_image()
        audit(certificate)

    def test_ya_estandar(self):
        """Prueba que una forma estandar queda como resto sin corchetes."""
        spider = Spider((1, 2, -1, 3, -2, 4, -3, -4), 9)
        certificate = reduce_to_standard(spider)
        assert certificate.brackets == ()
        assert certificate.remainder == ((spider, 1),)

    def test_ejemplo_grado_tres(self):
        """Prueba la reduccion de S(1,2,1,-1,-2) en g=6."""
        certificate = reduce_to_standard(Spider((1, 2, 1, -1, -2), 6))
        check_certificate(certificate)
        assert certificate.steps >= 1

    @pytest.mark.slow
    def test_arana_de_ocho_patas(self):
        """Prueba la reduccion de la arana de ocho patas en g=9."""
        check_certificate(reduce_to_standard(Spider(EIGHT_LEG_SPIDER, 9)))

    @pytest.mark.slow
    def test_aranas_aleatorias(self, rng):
        """Prueba 100 aranas aleatorias de grado 3 en g=6."""
        for _ in range(100):
            check_certificate(reduce_to_standard(random_spider(rng, 6, 3)))

    @pytest.mark.parametrize(
        "colors,genus",
        [
            ((1, 2, 1, -1, -2), 5),
            ((1, 2, -1, -2), 9),
            (EIGHT_LEG_SPIDER, 6),
        ],
    )
    def test_fuera_de_rango(self, colors, genus):
        """Prueba que se exige k >= 3 y g >= k+3."""
        with pytest.raises(GeneroInsuficienteException) as excinfo:
            reduce_to_standard(Spider(colors, genus))
        assert excinfo.value.exit_code == EXIT_RANGE_GUARD


class TestCertifyInBracketImage:
    """Pruebas para la certificacion con ciclado."""

    def test_separable_por_ciclado(self):
        """Prueba que sin restos la ruta es el ciclado y la pertenencia es cierta."""
        report = certify_in_bracket_image(Spider((1, -1, 2, -2, 3, -3), 7))
        assert report.route == CertificationRoute.CYCLING
        assert report.in_bracket_image is True
        assert report.residue == 0

    def test_grado_tres(self):
        """Prueba que el certificado completo cuadra y la ruta es coherente."""
        report = certify_in_bracket_image(Spider((1, 2, 1, -1, -2), 6))
        audit(report.certificate)
        assert report.residue == 3
        if report.certificate.remainder:
            assert report.route == CertificationRoute.PARITY
            assert report.in_bracket_image is None
        else:
            assert report.route == CertificationRoute.CYCLING

    @pytest.mark.parametrize(
        "colors, genus, residue",
        [
            ((1, 2, -1, 3, -2, -3), 7, 0),
            ((1, 2, -1, 3, -2, 4), 7, 0),
            ((1, 2, -1, 3, -2, 4, -3), 8, 1),
            ((1, 2, -1, 3, -2, -3, 4), 8, 1),
            ((1, 2, -1, 3, -2, 4, -3, 5), 9, 2),
        ],
    )
    def test_formas_estandar_que_se_vacian(self, colors, genus, residue):
        """Prueba que estas formas estandar quedan en la imagen tras ciclar la cuerda c1."""
        spider = Spider(colors, genus)
        report = certify_in_bracket_image(spider)
        audit(report.certificate)
        assert report.route == CertificationRoute.CYCLING
        assert report.certificate.remainder == ()
        assert report.in_bracket_image is True
        assert report.residue == residue
        assert report.cycled == [spider]
        assert report.normal_forms == {}

    def test_cadena_par_en_grado_tres(self):
        """Prueba que S(1,2,-1,3,-2) vuelve a si misma al ciclar y queda para la paridad."""
        spider = Spider((1, 2, -1, 3, -2), 6)
        report = certify_in_bracket_image(spider)
        audit(report.certificate)
        assert report.residue == 3
        assert report.route == CertificationRoute.PARITY
        assert report.in_bracket_image is None
        [(term, coefficient)] = report.certificate.remainder
        assert term == Spider((2, 4, -2, 3, -4), 6)
        assert coefficient == -1
        assert report.normal_forms == {term: (1, spider)}

    @pytest.mark.slow
    def test_cadena_par_en_grado_seis(self):
        """Prueba que la cadena de cuatro en k=6 queda como espejo de si misma."""
        spider = Spider((1, 2, -1, 3, -2, 4, -3, -4), 9)
        report = certify_in_bracket_image(spider)
        audit(report.certificate)
        assert report.route == CertificationRoute.MIRROR
        assert report.residue == 2
        assert [image for _, image in report.normal_forms.values()] == [spider]
