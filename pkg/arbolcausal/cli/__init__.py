"""
Línea de comandos: validación, descomposición, puntuación, estadísticas,
correlación y barrido sobre corpus en disco.
"""

from .comandos import (
    EXIT_DATA,
    EXIT_IO,
    EXIT_OK,
    cmd_correlate,
    cmd_decompose,
    cmd_score,
    cmd_stats,
    cmd_sweep,
    cmd_validate,
)
from .corpus import Corpus, CorpusCase, load_corpus, read_manual_scores, read_triplet_records
from .informes import RunConfig

__all__ = [
    "EXIT_OK",
    "EXIT_DATA",
    "EXIT_IO",
    "cmd_validate",
    "cmd_decompose",
    "cmd_score",
    "cmd_stats",
    "cmd_correlate",
    "cmd_sweep",
    "Corpus",
    "CorpusCase",
    "load_corpus",
    "read_manual_scores",
    "read_triplet_records",
    "RunConfig",
]
