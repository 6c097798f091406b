from unittest.mock import patch

import pytest

from src.features.cli.application.dtos import RunConfig
from src.features.cli.application.use_cases import (
    DimensionesUseCase,
    EjecutarH1UseCase,
    PerfilGeneracionCLIUseCase,
    ReducirAranaCLIUseCase,
    VerificarUseCase,
)
from src.config.settings import settings
from src.domain.shared.exceptions import EXIT_ORACLE_DISAGREEMENT
from src.features.cli.domain.entities import SuiteOutcome
from src.features.diagrams.application.use_cases import ReducirLoteUseCase
from src.features.diagrams.domain.exceptions import GeneroInsuficienteException
from src.features.homology.application.dtos import CoinvariantsDto, ProjectionCheckDto
from src.features.homology.domain.exceptions import EnsambladoDiscordanteException
from src.features.homology.infrastructure.repositories import FileSpanCacheRepository


def make_config(**data) -> RunConfig:
    return RunConfig.validate_and_create({"workers": 1, "cache_dir": None, **data})


class TestEjecutarH1UseCase:
    """Pruebas para el caso de uso de h1."""

    def test_informe(self):
        """Prueba que el informe lleva el resultado y el tiempo aparte."""
        config = make_config(subcommand="h1", algebra="assoc", size=2, degree=2)
        report = EjecutarH1UseCase().execute(config)
        assert report.subcommand == "h1"
        assert report.results[0]["free_rank"] == 4
        assert "wall_time" not in report.results[0]
        assert report.timing["wall_time"] >= 0
        assert report.config["algebra"] == "assoc"

    def test_con_cache(self, cache_dir):
        """Prueba que la segunda corrida sale de la cache y da lo mismo."""
        config = make_config(subcommand="h1", algebra="assoc", size=2, degree=2)
        use_case = EjecutarH1UseCase(FileSpanCacheRepository(cache_dir))
        first = use_case.execute(config).results[0]
        second = use_case.execute(config).results[0]
        assert second["cache_hit"]
        assert second["free_rank"] == first["free_rank"]

    def test_symp_con_proyeccion(self):
        """Prueba que h1 symp de peso 2 lleva la comprobacion de la proyeccion C13."""
        config = make_config(subcommand="h1", algebra="symp", size=2, degree=2)
        result = EjecutarH1UseCase().execute(config).results[0]
        assert result["projection"]["holds"]
        assert result["projection"]["h1_dimension"] == result["free_rank"] == 5
        assert "module_coinvariants" not in result

    def test_symp_completo_con_modulos(self):
        """Prueba que el modo full de peso 1 se contrasta con Sym3 H y Wedge3 H."""
        config = make_config(subcommand="h1", algebra="symp", size=2, degree=1, mode="full")
        result = EjecutarH1UseCase().execute(config).results[0]
        modules = result["module_coinvariants"]
        assert [m["module"] for m in modules] == ["sym3", "wedge3"]
        assert sum(m["dimension"] for m in modules) == result["coinvariant_part"] == 0
        assert "projection" not in result

    def test_symp_con_particiones_no_compara_modulos(self):
        """Prueba que con particiones elegidas no se comparan los sp-modulos."""
        config = make_config(
            subcommand="h1", algebra="symp", size=2, degree=1, mode="full", partitions="0:1"
        )
        result = EjecutarH1UseCase().execute(config).results[0]
        assert "module_coinvariants" not in result

    def test_symp_fuera_del_limite(self, monkeypatch):
        """Prueba que por encima del genero maximo no se hacen comprobaciones sp."""
        monkeypatch.setattr(settings, "SP_CHECK_MAX_GENUS", 1)
        config = make_config(subcommand="h1", algebra="symp", size=2, degree=2)
        result = EjecutarH1UseCase().execute(config).results[0]
        assert "projection" not in result

    def test_proyeccion_discordante(self):
        """Prueba que una proyeccion que no cuadra es una discrepancia de oraculos."""
        check = ProjectionCheckDto(
            genus=2,
            h1_dimension=5,
            target_dimension=6,
            kills_brackets=True,
            surjective=True,
            holds=False,
        )
        config = make_config(subcommand="h1", algebra="symp", size=2, degree=2)
        target = "src.features.cli.application.use_cases.ComprobarProyeccionUseCase"
        with patch(target) as use_case:
            use_case.return_value.execute.return_value = check
            with pytest.raises(EnsambladoDiscordanteException) as excinfo:
                EjecutarH1UseCase().execute(config)
        assert excinfo.value.exit_code == EXIT_ORACLE_DISAGREEMENT
        assert excinfo.value.details["obtained"] == 5

    def test_modulos_discordantes(self):
        """Prueba que unas coinvariantes de modulos distintas a las de h1 son una discrepancia."""
        modules = [
            CoinvariantsDto(module="sym3", module_dimension=4, dimension=1),
            CoinvariantsDto(module="wedge3", module_dimension=0, dimension=0),
        ]
        config = make_config(subcommand="h1", algebra="symp", size=2, degree=1, mode="full")
        target = "src.features.cli.application.use_cases.CoinvariantesUseCase"
        with patch(target) as use_case:
            use_case.return_value.execute.return_value = modules
            with pytest.raises(EnsambladoDiscordanteException) as excinfo:
                EjecutarH1UseCase().execute(config)
        assert excinfo.value.details == {
            "what": "sp-coinvariantes de H1 en k=1",
            "expected": 1,
            "obtained": 0,
        }


class TestVerificarUseCase:
    """Pruebas para el caso de uso de verify."""

    def test_cuenta_casos(self):
        """Prueba que las cuentas del informe vienen de la bateria."""
        config = make_config(subcommand="verify", suite="mirror", seed=7, cases=3, size=3)
        report = VerificarUseCase().execute(config)
        assert report.checks == {"cases": 3, "failed": 0}
        assert report.results[0]["passed"]

    def test_fallos_en_el_informe(self):
        """Prueba que los fallos se devuelven en el informe, sin excepcion."""
        outcome = SuiteOutcome("mirror", 7, 2, failures=("espejo: x",))
        config = make_config(subcommand="verify", suite="mirror", seed=7)
        with patch("src.features.cli.application.use_cases.run_suite", return_value=outcome):
            report = VerificarUseCase().execute(config)
        assert report.checks["failed"] == 1
        assert report.results[0]["failures"] == ["espejo: x"]

    @pytest.mark.slow
    def test_reducciones_por_lote(self):
        """Prueba que la bateria de reducciones pasa por el caso de uso de lotes."""
        config = make_config(
            subcommand="verify", suite="reduction", seed=7, cases=2, size=6, workers=1
        )
        target = "src.features.cli.application.use_cases.ReducirLoteUseCase"
        with patch(target, wraps=ReducirLoteUseCase) as batch:
            report = VerificarUseCase().execute(config)
        batch.assert_called_once_with(1)
        assert report.checks == {"cases": 2, "failed": 0}


class TestReducirAranaCLIUseCase:
    """Pruebas para el caso de uso de reduce-spider."""

    def test_reduccion(self):
        """Prueba que sin certificar se devuelve el certificado."""
        config = make_config(subcommand="reduce-spider", spider="1,-1,2,-2,3,-3", size=7)
        result = ReducirAranaCLIUseCase().execute(config).results[0]
        assert result["genus"] == 7
        assert len(result["brackets"]) == 1
        assert result["remainder"] == []

    def test_certificacion(self):
        """Prueba que la certificacion de una arana separable va por ciclado."""
        config = make_config(
            subcommand="reduce-spider", spider="1,-1,2,-2,3,-3", size=7, certify=True
        )
        result = ReducirAranaCLIUseCase().execute(config).results[0]
        assert result["route"] == "cycling"
        assert result["in_bracket_image"] is True

    def test_genero_insuficiente(self):
        """Prueba que g < k+3 se rechaza."""
        config = make_config(subcommand="reduce-spider", spider="1,2,1,-1,-2", size=5)
        with pytest.raises(GeneroInsuficienteException):
            ReducirAranaCLIUseCase().execute(config)


class TestDimensionesYPerfil:
    """Pruebas para dims y generation-profile."""

    def test_dims(self):
        """Prueba la dimension de a_2(1)."""
        config = make_config(subcommand="dims", algebra="symp", size=2, degree=1)
        result = DimensionesUseCase().execute(config).results[0]
        assert result["dimension"] == 24
        assert result["parts"] == {"sym3": 20, "wedge3": 4}

    def test_perfil(self):
        """Prueba que el perfil devuelve una fila por subconjunto."""
        config = make_config(subcommand="generation-profile", algebra="assoc", size=2, degree=3)
        results = PerfilGeneracionCLIUseCase().execute(config).results
        assert [row["degree"] for row in results] == [2, 3, 3]
