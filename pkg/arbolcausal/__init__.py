"""
Arbolcausal - Evaluación automática de árboles causales de casos clínicos

Esta biblioteca proporciona herramientas para:
- Leer, validar y escribir el formato de texto indentado de los árboles
- Descomponer los árboles en tripletas con profundidad
- Emparejar entidades con tesauro y distancia de edición
- Puntuar con P/R/F1 ponderados por profundidad y correlacionar con evaluaciones manuales

La configuración se puede personalizar a través de variables de entorno o un archivo .env.
"""

__version__ = "0.1.0"

# Importaciones principales
from .logger import setup_logger, get_logger
from .config import settings as config

# Importar submódulos
from . import formato
from . import tripletas
from . import emparejamiento
from . import metricas

# Configurar logger raíz por defecto
logger = get_logger("arbolcausal")

__all__ = [
    # Módulos principales
    "formato",
    "tripletas",
    "emparejamiento",
    "metricas",
    # Utilidades
    "setup_logger",
    "get_logger",
    "config",
    "logger",
    "__version__",
]
