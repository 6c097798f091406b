import re
from collections.abc import Iterable

from sympy import isprime

_SPIDER_TEXT = re.compile(r"^\s*-?\d+(\s*,\s*-?\d+)*\s*$")


def validate_rank(value: int, field_name: str = "n") -> int:
    """Valida el rango n del modulo libre H_n."""
    if value < 1:
        raise ValueError(f"El {field_name} debe ser mayor o igual que 1")
    return value


def validate_genus(value: int, field_name: str = "g") -> int:
    """Valida el genero g."""
    if value < 1:
        raise ValueError(f"El {field_name} debe ser mayor o igual que 1")
    return value


def validate_degree(value: int, field_name: str = "k") -> int:
    """Valida que el grado sea no negativo."""
    if value < 0:
        raise ValueError(f"El {field_name} no puede ser negativo")
    return value


def validate_prime(value: int, field_name: str = "primo") -> int:
    """Valida que el valor sea primo."""
    if not isprime(value):
        raise ValueError(f"El {field_name} {value} no es primo")
    return value


def validate_primes(values: Iterable[int], field_name: str = "primos") -> list[int]:
    """Valida una lista de primos distintos."""
    primes = [validate_prime(int(p), field_name) for p in values]
    if not primes:
        raise ValueError(f"La lista de {field_name} no puede estar vacia")
    if len(set(primes)) != len(primes):
        raise ValueError(f"La lista de {field_name} tiene repetidos")
    return primes


def validate_partitions(
    value: Iterable[tuple[int, int]], degree: int, allow_zero: bool, field_name: str = "particiones"
) -> list[tuple[int, int]]:
    """Valida particiones (i, j) con i + j = k.

    Las particiones son no ordenadas: (i, j) y (j, i) eligen los mismos corchetes,
    se devuelven normalizadas con i <= j y sin repetidos.
    """
    result: list[tuple[int, int]] = []
    for pair in value:
        i, j = (int(x) for x in pair)
        if i + j != degree:
            raise ValueError(f"La particion ({i},{j}) no suma {degree} en {field_name}")
        if min(i, j) < 0 or (min(i, j) == 0 and not allow_zero):
            raise ValueError(f"La particion ({i},{j}) no es admisible en {field_name}")
        normalized = (min(i, j), max(i, j))
        if normalized not in result:
            result.append(normalized)
    return sorted(result)


def parse_spider_text(value: str, field_name: str = "spider") -> tuple[int, ...]:
    """Convierte '1,4,-2,-1' en una tupla de colores con signo."""
    if not value or not _SPIDER_TEXT.match(value):
        raise ValueError(f"El {field_name} debe ser una lista de enteros separados por comas")
    colors = tuple(int(part) for part in value.split(","))
    if any(c == 0 for c in colors):
        raise ValueError(f"El {field_name} no admite el color 0")
    if len(colors) < 2:
        raise ValueError(f"El {field_name} necesita al menos dos patas")
    return colors


def parse_partitions_text(value: str, field_name: str = "particiones") -> list[tuple[int, int]]:
    """Convierte '2:1,1:2' en [(2, 1), (1, 2)]."""
    pairs: list[tuple[int, int]] = []
    for chunk in value.split(","):
        chunk = chunk.strip()
        if not re.match(r"^\d+:\d+$", chunk):
            raise ValueError(f"Formato invalido en {field_name}: '{chunk}' (se espera i:j)")
        left, right = chunk.split(":")
        pairs.append((int(left), int(right)))
    return pairs

