"""
Barrido de esquemas de ponderación frente a las puntuaciones manuales.

Para cada celda (método, C) se calcula el F1 ponderado de cada caso y su
correlación con la puntuación manual. El alineamiento no depende de los pesos,
así que se calcula una sola vez por caso.
"""

from typing import Iterable, List, Mapping, Optional, Sequence, Union

from pydantic import BaseModel

from ..emparejamiento.distancia import MatchConfig
from ..emparejamiento.tesauro import Thesaurus
from ..errores import ConstantInputError, MissingManualScoreError
from ..logger import get_logger
from .correlacion import CORRELATIONS, ManualScore, manual_index
from .ponderacion import UNWEIGHTED, WeightMethod, WeightScheme
from .puntuacion import CaseAlignment, CasePair, align_corpus

logger = get_logger(__name__)

DEFAULT_METHODS = (WeightMethod.RECIPROCAL, WeightMethod.EXPONENTIAL)
DEFAULT_C_GRID = (0.5, 1.0, 2.0, 4.0, 8.0)


class SweepCell(BaseModel):
    method: WeightMethod
    c: Optional[float] = None
    correlation: Optional[float] = None


class SweepTable(BaseModel):
    """Celdas ordenadas por correlación descendente; las indefinidas al final."""

    correlation: str = "pearson"
    cases: int = 0
    cells: List[SweepCell]

    @property
    def best(self) -> SweepCell:
        return self.cells[0]

    @property
    def baseline(self) -> SweepCell:
        return next(c for c in self.cells if c.method is WeightMethod.NONE)


def _orden(celda: SweepCell):
    metodo = list(WeightMethod).index(celda.method)
    return (celda.correlation is None, -(celda.correlation or 0.0), metodo, celda.c or 0.0)


def sweep_aligned(
    aligned: Sequence[CaseAlignment],
    manual: Union[Mapping[str, float], Iterable[ManualScore]],
    methods: Sequence[Union[WeightMethod, str]] = DEFAULT_METHODS,
    cs: Sequence[float] = DEFAULT_C_GRID,
    correlation: str = "pearson",
) -> SweepTable:
    """Igual que :func:`sweep` sobre casos ya alineados."""
    corr = CORRELATIONS[correlation]
    puntuaciones = manual_index(manual)
    faltan = [c.case_id for c in aligned if c.case_id not in puntuaciones]
    if faltan:
        raise MissingManualScoreError(faltan)
    sobrantes = set(puntuaciones) - {c.case_id for c in aligned}
    if sobrantes:
        logger.info("%d puntuaciones manuales sin caso evaluado; se ignoran", len(sobrantes))

    humano = [puntuaciones[c.case_id] for c in aligned]
    if len(set(humano)) == 1 and len(humano) > 1:
        raise ConstantInputError("Las puntuaciones manuales son constantes; la correlación no está definida")
    esquemas = [UNWEIGHTED]
    for metodo in dict.fromkeys(WeightMethod(m) for m in methods):
        if metodo is WeightMethod.NONE:
            continue
        esquemas.extend(WeightScheme(method=metodo, c=c) for c in dict.fromkeys(cs))

    celdas = []
    for esquema in esquemas:
        f1s = [caso.score(esquema).f1 for caso in aligned]
        try:
            valor: Optional[float] = corr(f1s, humano)
        except ConstantInputError:
            logger.warning("F1 constante con %s: correlación indefinida", esquema.label)
            valor = None
        celdas.append(
            SweepCell(
                method=esquema.method,
                c=None if esquema.method is WeightMethod.NONE else esquema.c,
                correlation=valor,
            )
        )
    return SweepTable(correlation=correlation, cases=len(aligned), cells=sorted(celdas, key=_orden))


def sweep(
    cases: Sequence[CasePair],
    manual: Union[Mapping[str, float], Iterable[ManualScore]],
    t: Optional[Thesaurus] = None,
    cfg: Optional[MatchConfig] = None,
    methods: Sequence[Union[WeightMethod, str]] = DEFAULT_METHODS,
    cs: Sequence[float] = DEFAULT_C_GRID,
    root_only: bool = False,
    correlation: str = "pearson",
    max_workers: int = 1,
) -> SweepTable:
    """
    Correlación con las puntuaciones manuales para cada esquema de ponderación.

    La celda ``none`` (sin ponderar) se incluye siempre como referencia.

    Parameters
    ----------
    cases : sequence of (TripletSet or None, TripletSet)
        Pares (predicción, gold).
    manual : mapping or iterable of ManualScore
        Puntuación manual de cada caso.
    methods : sequence of WeightMethod, optional
        Métodos ponderados a barrer. Por defecto recíproco y exponencial.
    cs : sequence of float, optional
        Valores de C. Por defecto 0.5, 1, 2, 4 y 8.
    correlation : {"pearson", "spearman"}, optional
        Coeficiente de correlación.

    Returns
    -------
    SweepTable
        Ordenada por correlación descendente.

    Raises
    ------
    MissingManualScoreError
        Si algún caso no tiene puntuación manual.
    ConstantInputError
        Si las puntuaciones manuales son constantes.
    """
    alineados = align_corpus(cases, t, cfg, root_only, max_workers)
    return sweep_aligned(alineados, manual, methods, cs, correlation)
