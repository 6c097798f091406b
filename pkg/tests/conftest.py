import os
import random
import sys

import pytest

# Agregar el directorio raíz al path para poder importar los módulos
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from src.infrastructure.cache import clear_cache  # noqa: E402

SEED = 7


def pytest_addoption(parser):
    parser.addoption(
        "--heavy",
        action="store_true",
        default=False,
        help="Ejecuta las corridas pesadas (g=6, k=3)",
    )


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: pruebas que tardan mas de unos segundos")
    config.addinivalue_line("markers", "heavy: corridas de aceptacion que tardan minutos u horas")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--heavy"):
        return
    skip_heavy = pytest.mark.skip(reason="necesita --heavy")
    for item in items:
        if "heavy" in item.keywords:
            item.add_marker(skip_heavy)


@pytest.fixture
def rng():
    """Generador pseudoaleatorio con semilla fija."""
    return random.Random(SEED)


@pytest.fixture
def cache_dir(tmp_path):
    """Directorio temporal para la cache de spans."""
    path = tmp_path / "cache"
    path.mkdir()
    return path


@pytest.fixture
def clean_memo():
    """Limpia la cache en memoria antes y despues de la prueba."""
    clear_cache()
    yield
    clear_cache()
