"""
Estadísticas de corpus: tripletas, nodos raíz, relaciones y profundidades.
"""

from collections import Counter
from typing import Dict, Iterable

from pydantic import BaseModel, Field

from ..formato.modelo import CausalForest, RelationType
from .descomposicion import decompose


class StatsReport(BaseModel):
    """
    Resumen de un corpus de bosques causales.

    ``triplets`` incluye las tripletas ``([root], parent_of, ·)``;
    ``triplets_without_root`` las excluye.
    """

    cases: int = 0
    nodes: int = 0
    roots: int = 0
    history_nodes: int = 0
    triplets: int = 0
    triplets_without_root: int = 0
    per_relation: Dict[str, int] = Field(
        default_factory=lambda: {r.value: 0 for r in RelationType}
    )
    depth_histogram: Dict[int, int] = Field(default_factory=dict)
    max_depth: int = 0

    @property
    def mean_triplets_per_case(self) -> float:
        return self.triplets / self.cases if self.cases else 0.0

    @property
    def mean_roots_per_case(self) -> float:
        return self.roots / self.cases if self.cases else 0.0


def forest_stats(corpus: Iterable[CausalForest]) -> StatsReport:
    """
    Cuenta tripletas, raíces, nodos, relaciones y profundidades de un corpus.

    Examples
    --------
    >>> from arbolcausal.formato import load_forest
    >>> informe = forest_stats([load_forest("A\\nB")])
    >>> informe.triplets, informe.roots, informe.triplets_without_root
    (2, 2, 0)
    """
    casos = nodos = raices = historia = 0
    relaciones: Counter = Counter()
    profundidades: Counter = Counter()

    for bosque in corpus:
        casos += 1
        raices += len(bosque.roots)
        for _, nodo in bosque.iter_nodes():
            nodos += 1
            historia += nodo.history
        for t in decompose(bosque):
            relaciones[t.relation.value] += 1
            profundidades[t.depth] += 1

    total = sum(relaciones.values())
    return StatsReport(
        cases=casos,
        nodes=nodos,
        roots=raices,
        history_nodes=historia,
        triplets=total,
        triplets_without_root=total - raices,
        per_relation={r.value: relaciones[r.value] for r in RelationType},
        depth_histogram=dict(sorted(profundidades.items())),
        max_depth=max(profundidades, default=0),
    )
