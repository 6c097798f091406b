from dataclasses import replace
from unittest.mock import MagicMock, patch

import pytest

from src.config.settings import settings
from src.domain.shared.custom_types import AlgebraKind, Mode, Ring
from src.domain.shared.exceptions import ValidationError
from src.features.homology.application.dtos import (
    CalcularH1Command,
    CoinvariantesCommand,
    PerfilGeneracionCommand,
)
from src.features.homology.application.interfaces.repositories import (
    AbstractSpanCacheRepository,
)
from src.features.homology.application.use_cases import (
    CalcularH1UseCase,
    CoinvariantesUseCase,
    ComprobarProyeccionUseCase,
    PerfilGeneracionUseCase,
)
from src.features.homology.domain.services.digests import basis_digest
from src.features.homology.domain.services.graded_algebras import algebra_for
from src.features.homology.infrastructure.repositories import FileSpanCacheRepository


@pytest.fixture
def command():
    """Fixture con el comando de H1(Der+(T(H_2)))_2 sobre Z."""
    return CalcularH1Command(algebra="assoc", size=2, degree=2, mode="plus", ring="z")


@pytest.fixture
def mock_repository():
    """Fixture que devuelve un repositorio de cache simulado y vacio."""
    repository = MagicMock(spec=AbstractSpanCacheRepository)
    repository.get_by_key.return_value = None
    return repository


class TestCalcularH1Command:
    """Pruebas para la validacion del comando de H1."""

    def test_particiones(self):
        """Prueba que el filtro de texto se normaliza."""
        command = CalcularH1Command(
            algebra="assoc", size=3, degree=3, ring="q", partitions="2:1,1:2"
        )
        assert command.partition_pairs == [(1, 2)]

    def test_sin_filtro(self, command):
        """Prueba que sin filtro no hay particiones explicitas."""
        assert command.partition_pairs is None
        assert command.algebra == AlgebraKind.ASSOC

    @pytest.mark.parametrize(
        "data",
        [
            {"algebra": "symp", "size": 2, "degree": 2, "ring": "z"},
            {"algebra": "assoc", "size": 0, "degree": 2},
            {"algebra": "assoc", "size": 2, "degree": -1},
            {"algebra": "assoc", "size": 2, "degree": 2, "partitions": "0:2"},
            {"algebra": "assoc", "size": 2, "degree": 2, "partitions": "dos"},
            {"algebra": "assoc", "size": 2, "degree": 2, "ring": "modp", "primes": [4]},
            {"algebra": "otra", "size": 2, "degree": 2},
        ],
    )
    def test_datos_invalidos(self, data):
        """Prueba que los datos invalidos se convierten en ValidationError."""
        with pytest.raises(ValidationError):
            CalcularH1Command.validate_and_create(data)


class TestCalcularH1UseCase:
    """Pruebas para el caso de uso de H1."""

    def test_sin_cache(self, command):
        """Prueba el calculo directo sin repositorio."""
        result = CalcularH1UseCase().execute(command)
        assert result.free_rank == 4
        assert result.description == "Z^4"
        assert result.cache_key is None
        assert not result.cache_hit

    def test_guarda_en_cache(self, command, mock_repository):
        """Prueba que un fallo de cache calcula y guarda la entrada."""
        result = CalcularH1UseCase(mock_repository).execute(command)
        mock_repository.get_by_key.assert_called_once_with(result.cache_key)
        mock_repository.add.assert_called_once()
        key, entry = mock_repository.add.call_args.args
        assert key == result.cache_key
        assert entry.result.free_rank == 4
        assert len(entry.column_digest) == 64

    def test_reutiliza_cache(self, command, mock_repository):
        """Prueba que una entrada con los mismos digest de base y columnas no se recalcula."""
        first = CalcularH1UseCase(mock_repository).execute(command)
        stored = mock_repository.add.call_args.args[1]
        assert stored.basis_digest == basis_digest(algebra_for("assoc", 2), 2, [(1, 1)])
        assert stored.columns_consumed > 0
        mock_repository.get_by_key.return_value = stored
        with patch("src.features.homology.application.use_cases.h1_weight") as h1_weight:
            second = CalcularH1UseCase(mock_repository).execute(command)
        h1_weight.assert_not_called()
        assert second.cache_hit
        assert second.free_rank == first.free_rank

    def test_descarta_base_distinta(self, command, mock_repository):
        """Prueba que una entrada con otra base se borra y se recalcula."""
        stored = MagicMock()
        stored.basis_digest = "otro"
        mock_repository.get_by_key.return_value = stored
        result = CalcularH1UseCase(mock_repository).execute(command)
        mock_repository.delete.assert_called_once_with(result.cache_key)
        assert not result.cache_hit
        assert result.free_rank == 4

    def test_descarta_columnas_distintas(self, command, mock_repository):
        """Prueba que una entrada con la base correcta y otro digest de columnas se recalcula."""
        CalcularH1UseCase(mock_repository).execute(command)
        stored = replace(mock_repository.add.call_args.args[1], column_digest="0" * 64)
        mock_repository.get_by_key.return_value = stored
        result = CalcularH1UseCase(mock_repository).execute(command)
        mock_repository.delete.assert_called_once_with(result.cache_key)
        assert not result.cache_hit
        assert result.free_rank == 4

    def test_sin_verificar_columnas(self, command, mock_repository, monkeypatch):
        """Prueba que con CACHE_VERIFY_COLUMNS apagado basta el digest de la base."""
        monkeypatch.setattr(settings, "CACHE_VERIFY_COLUMNS", False)
        CalcularH1UseCase(mock_repository).execute(command)
        stored = replace(mock_repository.add.call_args.args[1], column_digest="0" * 64)
        mock_repository.get_by_key.return_value = stored
        with patch("src.features.homology.application.use_cases.bracket_span") as span:
            result = CalcularH1UseCase(mock_repository).execute(command)
        span.assert_not_called()
        assert result.cache_hit

    def test_cache_en_disco(self, command, cache_dir):
        """Prueba la segunda corrida contra la cache en disco."""
        repository = FileSpanCacheRepository(cache_dir)
        first = CalcularH1UseCase(repository).execute(command)
        second = CalcularH1UseCase(repository).execute(command)
        assert not first.cache_hit
        assert second.cache_hit
        assert second.model_dump(exclude={"wall_time", "cache_hit"}) == first.model_dump(
            exclude={"wall_time", "cache_hit"}
        )

    def test_modo_full(self):
        """Prueba que el modo full reporta la parte de grado 0."""
        command = CalcularH1Command(algebra="assoc", size=2, degree=0, mode="full", ring="z")
        result = CalcularH1UseCase().execute(command)
        assert result.mode == Mode.FULL
        assert result.ring == Ring.Z
        assert result.degree_zero_part == 1


class TestOtrosCasosDeUso:
    """Pruebas para el perfil de generacion, las coinvariantes y la proyeccion."""

    def test_perfil(self):
        """Prueba que el perfil devuelve una fila por subconjunto."""
        command = PerfilGeneracionCommand(algebra="assoc", size=2, max_degree=3)
        rows = PerfilGeneracionUseCase().execute(command)
        assert [row.degree for row in rows] == [2, 3, 3]
        assert rows[0].spans_image

    def test_perfil_grado_invalido(self):
        """Prueba que el grado maximo debe ser al menos 2."""
        with pytest.raises(ValidationError):
            PerfilGeneracionCommand.validate_and_create(
                {"algebra": "assoc", "size": 2, "max_degree": 1}
            )

    def test_coinvariantes(self):
        """Prueba las coinvariantes de wedge^2 H en g=2."""
        command = CoinvariantesCommand(modules=["wedge2", "wedge2/omega0"], genus=2)
        results = CoinvariantesUseCase().execute(command)
        assert [r.dimension for r in results] == [1, 0]

    def test_modulo_desconocido(self):
        """Prueba que un modulo desconocido se rechaza."""
        with pytest.raises(ValidationError):
            CoinvariantesCommand.validate_and_create({"modules": ["sym9"], "genus": 2})

    def test_proyeccion(self):
        """Prueba la comprobacion de la proyeccion C13 en g=2."""
        result = ComprobarProyeccionUseCase().execute(2)
        assert result.holds
        assert result.h1_dimension == 5
