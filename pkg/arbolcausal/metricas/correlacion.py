"""
Correlación entre puntuaciones automáticas y puntuaciones manuales (0-100).
"""

from typing import Dict, Iterable, Mapping, Sequence, Union

import numpy as np
from pydantic import BaseModel, Field
from scipy.stats import rankdata

from ..errores import ConstantInputError, LengthMismatchError


class ManualScore(BaseModel):
    """Puntuación manual de un caso en la escala 0-100."""

    case_id: str
    score: float = Field(ge=0.0, le=100.0)


def _as_vectors(xs: Sequence[float], ys: Sequence[float]):
    x = np.asarray(xs, dtype=np.float64)
    y = np.asarray(ys, dtype=np.float64)
    if x.ndim != 1 or y.ndim != 1 or x.shape != y.shape:
        raise LengthMismatchError(f"Longitudes distintas: {x.size} y {y.size}")
    if x.size < 2:
        raise LengthMismatchError("Se necesitan al menos dos pares para la correlación")
    for nombre, v in (("xs", x), ("ys", y)):
        if np.all(v == v[0]):
            raise ConstantInputError(f"El vector {nombre} es constante; la correlación no está definida")
    return x, y


def pearson(xs: Sequence[float], ys: Sequence[float]) -> float:
    """
    Coeficiente de correlación de Pearson muestral.

    Raises
    ------
    LengthMismatchError
        Si las longitudes difieren o hay menos de dos elementos.
    ConstantInputError
        Si alguno de los vectores es constante.

    Examples
    --------
    >>> pearson([1, 2, 3], [2, 4, 6])
    1.0
    >>> round(pearson([1, 2, 3, 4], [1, 3, 2, 4]), 12)
    0.8
    """
    x, y = _as_vectors(xs, ys)
    dx = x - x.mean()
    dy = y - y.mean()
    r = float(np.dot(dx, dy) / np.sqrt(np.dot(dx, dx) * np.dot(dy, dy)))
    return max(-1.0, min(1.0, r))


def spearman(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Correlación de Spearman: Pearson sobre rangos (empates con rango medio)."""
    x, y = _as_vectors(xs, ys)
    return pearson(rankdata(x), rankdata(y))


CORRELATIONS = {"pearson": pearson, "spearman": spearman}


def manual_index(manual: Union[Mapping[str, float], Iterable[ManualScore]]) -> Dict[str, float]:
    """Diccionario ``case_id → puntuación`` a partir de cualquiera de las dos formas."""
    if isinstance(manual, Mapping):
        return {k: ManualScore(case_id=k, score=v).score for k, v in manual.items()}
    return {m.case_id: m.score for m in manual}
