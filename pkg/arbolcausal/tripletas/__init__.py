"""
Descomposición de árboles causales en tripletas con profundidad y estadísticas de corpus.
"""

from ..formato.modelo import RelationType
from .descomposicion import ROOT, RootToken, Triplet, TripletSet, decompose, root_triplets
from .estadisticas import StatsReport, forest_stats

__all__ = [
    "RelationType",
    "ROOT",
    "RootToken",
    "Triplet",
    "TripletSet",
    "decompose",
    "root_triplets",
    "StatsReport",
    "forest_stats",
]
