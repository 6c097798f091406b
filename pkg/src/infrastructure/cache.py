import time
from collections.abc import Callable
from functools import wraps
from typing import Any, TypeVar

from src.config.settings import settings

# Definimos tipos para el tipado
T = TypeVar("T")
CacheKey = str
CacheValue = Any
CacheDict = dict[CacheKey, tuple[CacheValue, float | None]]

# Cache en memoria del proceso
_cache: CacheDict = {}

# Sin expiracion por defecto: los resultados son funciones puras de sus argumentos
DEFAULT_EXPIRY: int | None = None


def get_cache(key: CacheKey) -> CacheValue | None:
    """Obtiene un valor de la caché si existe y no ha expirado."""
    if key not in _cache:
        return None

    value, expiry = _cache.pop(key)
    if expiry is not None and time.time() > expiry:
        return None

    # reinsertar al final la marca como usada recientemente
    _cache[key] = (value, expiry)
    return value


def set_cache(
    key: CacheKey, value: CacheValue, expiry_seconds: int | None = DEFAULT_EXPIRY
) -> None:
    """Guarda un valor en la caché, con expiracion opcional."""
    expiry = None if expiry_seconds is None else time.time() + expiry_seconds
    _cache.pop(key, None)
    _cache[key] = (value, expiry)
    _evict(settings.MEMO_MAX_ENTRIES)


def _evict(limit: int) -> None:
    """Descarta las entradas menos usadas por encima del limite."""
    while len(_cache) > max(limit, 0):
        del _cache[next(iter(_cache))]


def clear_cache(prefix: str | None = None) -> None:
    """Limpia la caché completa o solo las claves que comienzan con un prefijo."""
    if prefix is None:
        _cache.clear()
        return
    for key in [k for k in _cache if k.startswith(prefix)]:
        del _cache[key]


def cache_size(prefix: str = "") -> int:
    """Numero de entradas vivas con el prefijo dado."""
    return sum(1 for k in _cache if k.startswith(prefix))


def cached(
    expiry_seconds: int | None = DEFAULT_EXPIRY, key_prefix: str = ""
) -> Callable[[Callable[..., T]], Callable[..., T]]:
    """Decorador para cachear el resultado de una función.

    Los argumentos deben tener una representacion estable (enteros, tuplas),
    la clave se arma con su repr.
    """

    def decorator(func: Callable[..., T]) -> Callable[..., T]:
        @wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> T:
            cache_key = f"{key_prefix}{func.__name__}:{args!r}:{sorted(kwargs.items())!r}"

            if cache_key in _cache:
                cached_result = get_cache(cache_key)
                if cached_result is not None:
                    return cached_result  # type: ignore[no-any-return]

            result = func(*args, **kwargs)
            set_cache(cache_key, result, expiry_seconds)
            return result

        return wrapper

    return decorator
