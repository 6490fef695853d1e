"""
Logging centralizado de arbolcausal.

Todos los módulos piden su logger con ``get_logger(__name__)``; los mensajes
suben hasta el logger raíz ``arbolcausal``, el único con manejadores. La consola
escribe siempre en stderr, de modo que los informes de stdout se pueden
redirigir tal cual.

Uso:
    from arbolcausal.logger import get_logger
    logger = get_logger(__name__)
    logger.info("Corpus %s: %d casos", nombre, n)
"""

import logging
import sys
from pathlib import Path
from typing import Any, MutableMapping, Optional, Tuple, Union

ROOT_NAME = "arbolcausal"

Level = Union[str, int]


def _resolve_level(level: Level) -> int:
    if isinstance(level, int):
        return level
    valor = logging.getLevelNamesMapping().get(level.upper())
    if valor is None:
        raise ValueError(f"Nivel de log desconocido: {level!r}")
    return valor


def _settings_defaults() -> Tuple[str, Optional[Path], str, str]:
    # Importación diferida: config no debe depender de logger
    from .config import settings

    cfg = settings.logging
    return cfg.level, cfg.file, cfg.format, cfg.date_format


def _get_console_handler(formatter: logging.Formatter) -> logging.StreamHandler:
    """Manejador de consola sobre stderr."""
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(formatter)
    return handler


def _get_file_handler(log_file: Union[str, Path], formatter: logging.Formatter) -> logging.FileHandler:
    """Manejador de archivo UTF-8; crea el directorio si no existe."""
    ruta = Path(log_file)
    ruta.parent.mkdir(parents=True, exist_ok=True)
    handler = logging.FileHandler(ruta, encoding="utf-8")
    handler.setFormatter(formatter)
    return handler


def setup_logger(
    name: str = ROOT_NAME,
    level: Optional[Level] = None,
    log_file: Optional[Union[str, Path]] = None,
    log_format: Optional[str] = None,
    date_format: Optional[str] = None,
    propagate: bool = False,
) -> logging.Logger:
    """
    Configura un logger con los valores de ``settings.logging``.

    Para el logger raíz instala el manejador de consola una sola vez; las
    llamadas posteriores solo cambian el nivel. Los demás loggers propagan al
    raíz y solo reciben manejador propio si se indica ``log_file``.

    Parameters
    ----------
    name : str, optional
        Nombre del logger, por defecto ``"arbolcausal"``.
    level : str or int, optional
        Nivel (``"DEBUG"``, ``"INFO"``...). Por defecto el de la configuración.
    log_file : str or Path, optional
        Archivo adicional de log. El raíz usa ``settings.logging.file`` si existe.
    propagate : bool, optional
        Solo para el raíz: reenviar también a ``logging.root``.

    Examples
    --------
    >>> setup_logger("arbolcausal.ejemplo", level="DEBUG").level == logging.DEBUG
    True
    """
    nivel_cfg, archivo_cfg, formato_cfg, fecha_cfg = _settings_defaults()
    logger = logging.getLogger(name)
    logger.setLevel(_resolve_level(level if level is not None else nivel_cfg))

    formatter = logging.Formatter(log_format or formato_cfg, datefmt=date_format or fecha_cfg)
    if name == ROOT_NAME:
        logger.propagate = propagate
        if not any(getattr(h, "_arbolcausal_console", False) for h in logger.handlers):
            consola = _get_console_handler(formatter)
            setattr(consola, "_arbolcausal_console", True)
            logger.addHandler(consola)
            archivo = log_file or archivo_cfg
            if archivo:
                logger.addHandler(_get_file_handler(archivo, formatter))
    else:
        logger.propagate = True
        if log_file and not logger.handlers:
            logger.addHandler(_get_file_handler(log_file, formatter))
    return logger


def get_logger(name: Optional[str] = None) -> logging.Logger:
    """Logger del módulo ``name``; sin nombre, el raíz ya configurado."""
    if not name or name == ROOT_NAME:
        raiz = logging.getLogger(ROOT_NAME)
        return raiz if raiz.handlers else setup_logger(ROOT_NAME)
    return logging.getLogger(name)


def set_verbosity(verbose: int = 0, quiet: bool = False) -> int:
    """
    Ajusta el nivel del raíz según las opciones ``-v`` (DEBUG) y ``-q`` (ERROR).

    Sin opciones se mantiene el nivel de la configuración. Devuelve el nivel
    aplicado.
    """
    raiz = get_logger()
    if quiet:
        raiz.setLevel(logging.ERROR)
    elif verbose:
        raiz.setLevel(logging.DEBUG)
    return raiz.level


class CaseLogger(logging.LoggerAdapter):
    """Antepone ``[case_id]`` a cada mensaje."""

    def process(self, msg: Any, kwargs: MutableMapping[str, Any]) -> Tuple[Any, MutableMapping[str, Any]]:
        case_id = (self.extra or {}).get("case_id", "?")
        return f"[{case_id}] {msg}", kwargs


def case_logger(logger: logging.Logger, case_id: str) -> CaseLogger:
    return CaseLogger(logger, {"case_id": case_id})


setup_logger(ROOT_NAME)
