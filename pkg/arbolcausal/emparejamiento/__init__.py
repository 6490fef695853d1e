"""
Emparejamiento de entidades y tripletas entre predicción y gold.

Incluye el tesauro de formas representativas, la comparación por distancia de
edición normalizada y el alineamiento uno a uno de tripletas.
"""

from .tesauro import Thesaurus, EMPTY_THESAURUS
from .distancia import MatchConfig, EntityMatch, normalize, edit_ratio, entity_match
from .alineacion import AlignedPair, Alignment, TripletMatch, triplet_match, align

__all__ = [
    "Thesaurus",
    "EMPTY_THESAURUS",
    "MatchConfig",
    "EntityMatch",
    "normalize",
    "edit_ratio",
    "entity_match",
    "AlignedPair",
    "Alignment",
    "TripletMatch",
    "triplet_match",
    "align",
]
