"""
Ponderación de tripletas por profundidad y tipo de relación.

Los clínicos dan más importancia a las capas superiores del árbol (la raíz
ante todo) y a las relaciones ``parent_of`` que a los modificadores. Se
ofrecen dos familias de pesos:

- recíproca:   W = x / (1 + C·d), con x = 1 para parent_of y 1/2 para el resto.
- exponencial: W = x / C**d,      con x = 1 para parent_of y 1/C para el resto.

Con C=2 y ponderación recíproca se obtiene la configuración por defecto.
"""

from enum import Enum

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..config import settings
from ..formato.modelo import RelationType
from ..tripletas.descomposicion import Triplet, TripletSet


class WeightMethod(str, Enum):
    NONE = "none"
    RECIPROCAL = "reciprocal"
    EXPONENTIAL = "exponential"


class WeightScheme(BaseModel):
    """
    Esquema de ponderación.

    Parameters
    ----------
    method : WeightMethod
        ``none`` asigna peso 1 a todas las tripletas.
    c : float
        Constante C > 0. Por defecto 2.
    """

    model_config = ConfigDict(frozen=True)

    method: WeightMethod = WeightMethod.RECIPROCAL
    c: float = Field(default=2.0, gt=0.0)

    @classmethod
    def from_settings(cls) -> "WeightScheme":
        return cls(method=WeightMethod(settings.evaluation.method), c=settings.evaluation.c)

    @property
    def label(self) -> str:
        if self.method is WeightMethod.NONE:
            return WeightMethod.NONE.value
        return f"{self.method.value}(C={self.c:g})"


UNWEIGHTED = WeightScheme(method=WeightMethod.NONE)


def _relation_factor(is_parent: np.ndarray, scheme: WeightScheme) -> np.ndarray:
    otros = 0.5 if scheme.method is WeightMethod.RECIPROCAL else 1.0 / scheme.c
    return np.where(is_parent, 1.0, otros)


def _weights(depths: np.ndarray, is_parent: np.ndarray, scheme: WeightScheme) -> np.ndarray:
    if scheme.method is WeightMethod.NONE:
        return np.ones(depths.shape, dtype=np.float64)
    x = _relation_factor(is_parent, scheme)
    if scheme.method is WeightMethod.RECIPROCAL:
        return x / (1.0 + scheme.c * depths)
    return x / np.power(scheme.c, depths)


def triplet_weight(t: Triplet, s: WeightScheme) -> float:
    """
    Peso de una tripleta.

    Examples
    --------
    >>> from arbolcausal.formato import Entity, RelationType
    >>> t = Triplet(Entity("B"), RelationType.LOCATED, Entity("C"), 2)
    >>> round(triplet_weight(t, WeightScheme()), 12)
    0.1
    """
    pesos = _weights(
        np.array([t.depth], dtype=np.float64),
        np.array([t.relation is RelationType.PARENT_OF]),
        s,
    )
    return float(pesos[0])


def triplet_weights(ts: TripletSet, s: WeightScheme) -> np.ndarray:
    """Pesos de todas las tripletas de un conjunto, en su orden."""
    depths = np.fromiter((t.depth for t in ts), dtype=np.float64, count=len(ts))
    is_parent = np.fromiter((t.relation is RelationType.PARENT_OF for t in ts), dtype=bool, count=len(ts))
    return _weights(depths, is_parent, s)
