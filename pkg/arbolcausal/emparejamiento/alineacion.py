"""
Comparación de tripletas y alineamiento uno a uno entre predicción y gold.

Una tripleta predicha es correcta si coinciden la relación, la cabeza, la cola
y los indicadores ``H:``. La profundidad no se compara. Cada tripleta gold
puede acreditar como mucho a una predicha: se enumeran los pares que
coinciden, se ordenan por coste (suma de razones), índice predicho e índice
gold, y se aceptan de forma voraz.
"""

from collections import defaultdict
from dataclasses import dataclass
from typing import DefaultDict, List, NamedTuple, Optional, Tuple

from ..errores import ContractError
from ..formato.modelo import RelationType
from ..tripletas.descomposicion import RootToken, Triplet, TripletSet
from .distancia import DEFAULT_MATCH_CONFIG, MatchConfig, canonical_form, edit_ratio, entity_match
from .tesauro import EMPTY_THESAURUS, Thesaurus


class TripletMatch(NamedTuple):
    matched: bool
    cost: float


class AlignedPair(NamedTuple):
    pred_index: int
    gold_index: int
    cost: float


@dataclass(frozen=True)
class Alignment:
    """
    Alineamiento uno a uno entre las tripletas predichas y las gold.

    Los pares y los índices sin pareja particionan ``range(pred_size)`` y
    ``range(gold_size)``.
    """

    pairs: Tuple[AlignedPair, ...]
    unmatched_pred: Tuple[int, ...]
    unmatched_gold: Tuple[int, ...]
    pred_size: int
    gold_size: int

    def __post_init__(self) -> None:
        pred = sorted([p.pred_index for p in self.pairs] + list(self.unmatched_pred))
        gold = sorted([p.gold_index for p in self.pairs] + list(self.unmatched_gold))
        if pred != list(range(self.pred_size)) or gold != list(range(self.gold_size)):
            raise ContractError("El alineamiento no particiona los índices de ambos conjuntos")

    @property
    def matched_count(self) -> int:
        return len(self.pairs)


def triplet_match(
    pred: Triplet,
    gold: Triplet,
    t: Optional[Thesaurus] = None,
    cfg: Optional[MatchConfig] = None,
) -> TripletMatch:
    """
    Compara dos tripletas.

    Returns
    -------
    TripletMatch
        ``matched`` y ``cost`` (razón de la cabeza + razón de la cola; 0 si
        ambas son exactas). Si no coinciden, el coste es infinito.
    """
    if (
        pred.relation is not gold.relation
        or pred.head_history != gold.head_history
        or pred.tail_history != gold.tail_history
    ):
        return TripletMatch(False, float("inf"))
    cabeza = entity_match(pred.head, gold.head, t, cfg)
    if not cabeza.matched:
        return TripletMatch(False, float("inf"))
    cola = entity_match(pred.tail, gold.tail, t, cfg, gold.relation is RelationType.POLARITY)
    if not cola.matched:
        return TripletMatch(False, float("inf"))
    return TripletMatch(True, cabeza.ratio + cola.ratio)


_Key = Tuple[RelationType, bool, bool]
# (índice, cabeza canónica o None para [root], cola canónica)
_Entry = Tuple[int, Optional[str], str]


def _canonical_entries(ts: TripletSet, t: Thesaurus, cfg: MatchConfig) -> List[Tuple[_Key, _Entry]]:
    entradas = []
    for i, tr in enumerate(ts):
        cabeza = None if isinstance(tr.head, RootToken) else canonical_form(tr.head.surface, t, cfg.unicode_normalize)
        cola = canonical_form(tr.tail.surface, t, cfg.unicode_normalize)
        entradas.append(((tr.relation, tr.head_history, tr.tail_history), (i, cabeza, cola)))
    return entradas


def align(
    pred: TripletSet,
    gold: TripletSet,
    t: Optional[Thesaurus] = None,
    cfg: Optional[MatchConfig] = None,
) -> Alignment:
    """
    Alineamiento voraz uno a uno por coste ascendente.

    Produce los mismos pares que aplicar :func:`triplet_match` a todos los
    pares, pero normaliza cada tripleta una sola vez y solo compara tripletas
    con la misma relación e indicadores ``H:``.

    Examples
    --------
    >>> from arbolcausal.formato import load_forest
    >>> from arbolcausal.tripletas import decompose
    >>> ts = decompose(load_forest("A\\n  B"))
    >>> align(ts, ts).matched_count
    2
    """
    t = t or EMPTY_THESAURUS
    cfg = cfg or DEFAULT_MATCH_CONFIG

    por_clave: DefaultDict[_Key, List[_Entry]] = defaultdict(list)
    for clave, entrada in _canonical_entries(gold, t, cfg):
        por_clave[clave].append(entrada)

    candidatos: List[Tuple[float, int, int]] = []
    for clave, (pi, p_cabeza, p_cola) in _canonical_entries(pred, t, cfg):
        exacta_cola = clave[0] is RelationType.POLARITY and cfg.polarity_exact
        for gi, g_cabeza, g_cola in por_clave.get(clave, ()):
            if p_cabeza is None or g_cabeza is None:
                if p_cabeza is not g_cabeza:
                    continue
                r_cabeza = 0.0
            else:
                r_cabeza = edit_ratio(p_cabeza, g_cabeza)
                if not cfg.accepts(r_cabeza):
                    continue
            r_cola = edit_ratio(p_cola, g_cola)
            if not (p_cola == g_cola if exacta_cola else cfg.accepts(r_cola)):
                continue
            candidatos.append((r_cabeza + r_cola, pi, gi))

    candidatos.sort()
    usados_pred = set()
    usados_gold = set()
    pares = []
    for coste, pi, gi in candidatos:
        if pi in usados_pred or gi in usados_gold:
            continue
        usados_pred.add(pi)
        usados_gold.add(gi)
        pares.append(AlignedPair(pi, gi, coste))

    return Alignment(
        pairs=tuple(pares),
        unmatched_pred=tuple(i for i in range(len(pred)) if i not in usados_pred),
        unmatched_gold=tuple(i for i in range(len(gold)) if i not in usados_gold),
        pred_size=len(pred),
        gold_size=len(gold),
    )
