"""
Métricas de evaluación de árboles causales.

Este paquete contiene la ponderación de tripletas por profundidad y relación,
la puntuación P/R/F1 por caso y por corpus, la correlación con puntuaciones
manuales y el barrido de esquemas de ponderación.
"""

from .ponderacion import WeightMethod, WeightScheme, UNWEIGHTED, triplet_weight, triplet_weights
from .puntuacion import (
    PRF,
    CaseScore,
    CorpusScore,
    CaseAlignment,
    f1_score,
    score_case,
    pair_cases,
    align_corpus,
    aggregate,
    score_corpus,
)
from .correlacion import ManualScore, pearson, spearman
from .barrido import DEFAULT_C_GRID, DEFAULT_METHODS, SweepCell, SweepTable, sweep, sweep_aligned

__all__ = [
    "WeightMethod",
    "WeightScheme",
    "UNWEIGHTED",
    "triplet_weight",
    "triplet_weights",
    "PRF",
    "CaseScore",
    "CorpusScore",
    "CaseAlignment",
    "f1_score",
    "score_case",
    "pair_cases",
    "align_corpus",
    "aggregate",
    "score_corpus",
    "ManualScore",
    "pearson",
    "spearman",
    "DEFAULT_C_GRID",
    "DEFAULT_METHODS",
    "SweepCell",
    "SweepTable",
    "sweep",
    "sweep_aligned",
]
