"""
Precisión, cobertura y F1 ponderados por caso y por corpus.

La precisión suma los pesos de las tripletas predichas acertadas (cada una con
su propia profundidad y relación) sobre el peso total predicho; la cobertura
hace lo mismo con las tripletas gold. Con ``method=none`` se obtienen las
métricas por conteo.

El agregado micro suma numeradores y denominadores de todos los casos antes de
dividir; el macro promedia P/R/F1 de cada caso. Un denominador nulo produce 0
y una marca en el caso, nunca un error.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, Field

from ..errores import ContractError, CorpusError
from ..emparejamiento.alineacion import Alignment, align
from ..emparejamiento.distancia import DEFAULT_MATCH_CONFIG, MatchConfig
from ..emparejamiento.tesauro import EMPTY_THESAURUS, Thesaurus
from ..formato.modelo import RelationType
from ..logger import case_logger, get_logger
from ..tripletas.descomposicion import TripletSet, root_triplets
from .ponderacion import WeightScheme, triplet_weights

logger = get_logger(__name__)

MISSING_PREDICTION = "missing_prediction"
EMPTY_PREDICTION = "empty_prediction"
EMPTY_GOLD = "empty_gold"


class PRF(BaseModel):
    precision: float = 0.0
    recall: float = 0.0
    f1: float = 0.0


class CaseScore(PRF):
    """Puntuación de un caso (o agregado con la misma forma)."""

    case_id: str
    matched_weight_pred: float = 0.0
    total_weight_pred: float = 0.0
    matched_weight_gold: float = 0.0
    total_weight_gold: float = 0.0
    matched_count: int = 0
    pred_count: int = 0
    gold_count: int = 0
    flags: List[str] = Field(default_factory=list)


class CorpusScore(BaseModel):
    """Agregados micro y macro, puntuaciones por caso y desglose por relación."""

    scheme: WeightScheme
    root_only: bool = False
    micro: CaseScore
    macro: PRF
    per_case: List[CaseScore]
    per_relation: Dict[str, CaseScore]


def f1_score(precision: float, recall: float) -> float:
    """Media armónica; 0 si precisión + cobertura es 0."""
    total = precision + recall
    return 0.0 if total == 0 else 2.0 * precision * recall / total


def _build_score(
    case_id: str,
    matched_p: float,
    total_p: float,
    matched_g: float,
    total_g: float,
    matched: int,
    pred_count: int,
    gold_count: int,
    flags: Iterable[str] = (),
) -> CaseScore:
    marcas = list(flags)
    if pred_count == 0 and EMPTY_PREDICTION not in marcas:
        marcas.append(EMPTY_PREDICTION)
    if gold_count == 0 and EMPTY_GOLD not in marcas:
        marcas.append(EMPTY_GOLD)
    precision = matched_p / total_p if total_p > 0 else 0.0
    recall = matched_g / total_g if total_g > 0 else 0.0
    return CaseScore(
        case_id=case_id,
        precision=precision,
        recall=recall,
        f1=f1_score(precision, recall),
        matched_weight_pred=matched_p,
        total_weight_pred=total_p,
        matched_weight_gold=matched_g,
        total_weight_gold=total_g,
        matched_count=matched,
        pred_count=pred_count,
        gold_count=gold_count,
        flags=marcas,
    )


def _check_alignment(pred: TripletSet, gold: TripletSet, alignment: Alignment) -> None:
    if alignment.pred_size != len(pred) or alignment.gold_size != len(gold):
        raise ContractError(
            f"El alineamiento ({alignment.pred_size}×{alignment.gold_size}) no corresponde "
            f"a los conjuntos evaluados ({len(pred)}×{len(gold)})"
        )


def score_case(
    pred: TripletSet,
    gold: TripletSet,
    alignment: Alignment,
    s: WeightScheme,
    flags: Iterable[str] = (),
) -> CaseScore:
    """
    Puntuación P/R/F1 ponderada de un caso.

    Parameters
    ----------
    pred, gold : TripletSet
        Tripletas predichas y gold.
    alignment : Alignment
        Alineamiento calculado exactamente sobre estos conjuntos.
    s : WeightScheme
        Esquema de ponderación.
    flags : iterable of str, optional
        Marcas adicionales del caso (p. ej. ``missing_prediction``).

    Raises
    ------
    ContractError
        Si el alineamiento no corresponde a los tamaños de los conjuntos.
    """
    _check_alignment(pred, gold, alignment)
    pesos_p = triplet_weights(pred, s)
    pesos_g = triplet_weights(gold, s)
    idx_p = np.fromiter((p.pred_index for p in alignment.pairs), dtype=np.intp, count=len(alignment.pairs))
    idx_g = np.fromiter((p.gold_index for p in alignment.pairs), dtype=np.intp, count=len(alignment.pairs))
    return _build_score(
        gold.case_id or pred.case_id,
        float(pesos_p[np.sort(idx_p)].sum()),
        float(pesos_p.sum()),
        float(pesos_g[np.sort(idx_g)].sum()),
        float(pesos_g.sum()),
        alignment.matched_count,
        len(pred),
        len(gold),
        flags,
    )


@dataclass(frozen=True)
class CaseAlignment:
    """Caso alineado: se reutiliza para puntuar con cualquier esquema."""

    case_id: str
    pred: TripletSet
    gold: TripletSet
    alignment: Alignment
    flags: Tuple[str, ...] = ()

    def score(self, s: WeightScheme) -> CaseScore:
        return score_case(self.pred, self.gold, self.alignment, s, self.flags)


CasePair = Tuple[Optional[TripletSet], Optional[TripletSet]]


def pair_cases(preds: Iterable[TripletSet], golds: Iterable[TripletSet]) -> List[CasePair]:
    """
    Empareja predicciones y gold por ``case_id``.

    Raises
    ------
    CorpusError
        Si hay ids duplicados en alguno de los corpus o predicciones sin gold.
    """
    def indexar(conjuntos: Iterable[TripletSet], nombre: str) -> Dict[str, TripletSet]:
        indice: Dict[str, TripletSet] = {}
        duplicados = set()
        for ts in conjuntos:
            if ts.case_id in indice:
                duplicados.add(ts.case_id)
            indice[ts.case_id] = ts
        if duplicados:
            raise CorpusError(f"Ids de caso duplicados en {nombre}", sorted(duplicados))
        return indice

    gold = indexar(golds, "gold")
    pred = indexar(preds, "predicción")
    huerfanos = sorted(set(pred) - set(gold))
    if huerfanos:
        raise CorpusError("Predicciones sin caso gold", huerfanos)
    return [(pred.get(case_id), gold[case_id]) for case_id in sorted(gold)]


def _align_case(
    args: Tuple[str, TripletSet, TripletSet, Thesaurus, MatchConfig, Tuple[str, ...]]
) -> CaseAlignment:
    case_id, pred, gold, t, cfg, flags = args
    return CaseAlignment(case_id, pred, gold, align(pred, gold, t, cfg), flags)


def align_corpus(
    cases: Sequence[CasePair],
    t: Optional[Thesaurus] = None,
    cfg: Optional[MatchConfig] = None,
    root_only: bool = False,
    max_workers: int = 1,
    flags: Optional[Mapping[str, Sequence[str]]] = None,
) -> List[CaseAlignment]:
    """
    Alinea todos los casos de un corpus, opcionalmente en paralelo.

    El resultado se ordena por ``case_id``, así que no depende del número de
    procesos. Una predicción ausente (None) se evalúa como vacía y se marca.

    Raises
    ------
    CorpusError
        Si un caso gold aparece dos veces o una predicción no tiene gold.
    """
    t = t or EMPTY_THESAURUS
    cfg = cfg or DEFAULT_MATCH_CONFIG
    flags = flags or {}

    trabajos = []
    vistos = set()
    duplicados = set()
    huerfanos = []
    for pred, gold in cases:
        if gold is None:
            huerfanos.append(pred.case_id if pred is not None else "")
            continue
        case_id = gold.case_id
        if case_id in vistos:
            duplicados.add(case_id)
        vistos.add(case_id)
        if pred is not None and pred.case_id and pred.case_id != case_id:
            raise CorpusError(f"La predicción {pred.case_id!r} está emparejada con el gold {case_id!r}")
        marcas = tuple(flags.get(case_id, ()))
        if pred is None:
            case_logger(logger, case_id).info("sin predicción: se evalúa como árbol vacío")
            pred = TripletSet((), case_id)
            marcas += (MISSING_PREDICTION,)
        if root_only:
            pred, gold = root_triplets(pred), root_triplets(gold)
        trabajos.append((case_id, pred, gold, t, cfg, marcas))

    if duplicados:
        raise CorpusError("Ids de caso duplicados", sorted(duplicados))
    if huerfanos:
        raise CorpusError("Predicciones sin caso gold", sorted(huerfanos))

    if max_workers > 1 and len(trabajos) > 1:
        logger.debug("Alineando %d casos con %d procesos", len(trabajos), max_workers)
        trozo = max(1, len(trabajos) // (max_workers * 4))
        with ProcessPoolExecutor(max_workers=max_workers) as pool:
            alineados = list(pool.map(_align_case, trabajos, chunksize=trozo))
    else:
        alineados = [_align_case(trabajo) for trabajo in trabajos]
    return sorted(alineados, key=lambda c: c.case_id)


def _relation_breakdown(aligned: Sequence[CaseAlignment], s: WeightScheme) -> Dict[str, CaseScore]:
    totales = {r: np.zeros(4) for r in RelationType}
    conteos = {r: [0, 0, 0] for r in RelationType}
    for caso in aligned:
        pesos_p = triplet_weights(caso.pred, s)
        pesos_g = triplet_weights(caso.gold, s)
        acertadas_p = {p.pred_index for p in caso.alignment.pairs}
        acertadas_g = {p.gold_index for p in caso.alignment.pairs}
        for i, t in enumerate(caso.pred):
            totales[t.relation][1] += pesos_p[i]
            conteos[t.relation][1] += 1
            if i in acertadas_p:
                totales[t.relation][0] += pesos_p[i]
                conteos[t.relation][0] += 1
        for i, t in enumerate(caso.gold):
            totales[t.relation][3] += pesos_g[i]
            conteos[t.relation][2] += 1
            if i in acertadas_g:
                totales[t.relation][2] += pesos_g[i]
    return {
        r.value: _build_score(
            r.value,
            float(totales[r][0]),
            float(totales[r][1]),
            float(totales[r][2]),
            float(totales[r][3]),
            conteos[r][0],
            conteos[r][1],
            conteos[r][2],
        )
        for r in RelationType
    }


def aggregate(aligned: Sequence[CaseAlignment], s: WeightScheme, root_only: bool = False) -> CorpusScore:
    """
    Puntúa casos ya alineados con un esquema de ponderación.

    Los numeradores y denominadores micro son la suma de los de cada caso, en
    orden de ``case_id``.
    """
    por_caso = [caso.score(s) for caso in sorted(aligned, key=lambda c: c.case_id)]
    micro = _build_score(
        "micro",
        sum(c.matched_weight_pred for c in por_caso),
        sum(c.total_weight_pred for c in por_caso),
        sum(c.matched_weight_gold for c in por_caso),
        sum(c.total_weight_gold for c in por_caso),
        sum(c.matched_count for c in por_caso),
        sum(c.pred_count for c in por_caso),
        sum(c.gold_count for c in por_caso),
    )
    if por_caso:
        macro = PRF(
            precision=float(np.mean([c.precision for c in por_caso])),
            recall=float(np.mean([c.recall for c in por_caso])),
            f1=float(np.mean([c.f1 for c in por_caso])),
        )
    else:
        macro = PRF()
    return CorpusScore(
        scheme=s,
        root_only=root_only,
        micro=micro,
        macro=macro,
        per_case=por_caso,
        per_relation=_relation_breakdown(aligned, s),
    )


def score_corpus(
    cases: Sequence[CasePair],
    t: Optional[Thesaurus] = None,
    cfg: Optional[MatchConfig] = None,
    s: Optional[WeightScheme] = None,
    root_only: bool = False,
    max_workers: int = 1,
) -> CorpusScore:
    """
    Evalúa un corpus de pares (predicción, gold).

    Parameters
    ----------
    cases : sequence of (TripletSet or None, TripletSet)
        Pares por caso; una predicción None se evalúa como vacía.
    t : Thesaurus, optional
        Tesauro de formas representativas.
    cfg : MatchConfig, optional
        Umbral y normalización.
    s : WeightScheme, optional
        Ponderación; por defecto recíproca con C=2.
    root_only : bool, optional
        Evaluar solo las tripletas ``([root], parent_of, ·)``.
    max_workers : int, optional
        Procesos para el alineamiento; no cambia el resultado.

    Returns
    -------
    CorpusScore
    """
    alineados = align_corpus(cases, t, cfg, root_only, max_workers)
    return aggregate(alineados, s or WeightScheme(), root_only)
