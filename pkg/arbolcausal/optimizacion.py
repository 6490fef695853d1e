"""
Utilidades de rendimiento para arbolcausal.

La evaluación compara cada tripleta predicha con cada tripleta gold, así que la
misma entidad se normaliza muchas veces; este módulo ofrece la caché que usan
esas funciones.
"""

from functools import lru_cache, wraps
from typing import Any, Callable, Optional, TypeVar

from .config import settings

# Type variable para genéricos
T = TypeVar('T')


def cachear_resultados(maxsize: Optional[int] = None) -> Callable[[Callable[..., T]], Callable[..., T]]:
    """
    Decora una función para cachear sus resultados y evitar cálculos repetidos.

    Las listas de los argumentos se convierten en tuplas para poder hacer hash.
    Si la caché está deshabilitada en la configuración (entorno ``testing``), la
    función se devuelve sin envolver.

    Args:
        maxsize: Número máximo de entradas en la caché. Por defecto el de
            ``settings.performance.cache_size``.

    Returns:
        Decorador que aplica caché a la función. La función decorada expone
        ``cache_clear()``.
    """
    def decorator(func: Callable[..., T]) -> Callable[..., T]:
        if not settings.performance.cache_enabled:
            func.cache_clear = lambda: None  # type: ignore[attr-defined]
            return func

        tamano = settings.performance.cache_size if maxsize is None else maxsize
        cached_func = lru_cache(maxsize=tamano)(func)

        @wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> T:
            args_hashable = tuple(tuple(arg) if isinstance(arg, list) else arg for arg in args)
            kwargs_hashable = {k: tuple(v) if isinstance(v, list) else v for k, v in kwargs.items()}
            return cached_func(*args_hashable, **kwargs_hashable)

        wrapper.cache_clear = cached_func.cache_clear  # type: ignore[attr-defined]
        return wrapper
    return decorator
