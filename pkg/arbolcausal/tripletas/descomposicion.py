"""
Descomposición de bosques causales en tripletas con profundidad.

La entidad ficticia ``[root]`` tiene profundidad 0 y es el padre de cada nodo
de primer nivel; la cabeza de cada nodo tiene la profundidad de su padre más 1.
Una tripleta ``parent_of`` tiene la profundidad de su entidad padre y una
tripleta de modificador la de la cabeza de su nodo.
"""

from dataclasses import dataclass
from typing import Iterator, List, Tuple, Union

from ..formato.modelo import CausalForest, Entity, Modifier, Node, RelationType


@dataclass(frozen=True)
class RootToken:
    """Entidad ficticia ``[root]``; solo coincide consigo misma."""

    surface: str = "[root]"

    def __str__(self) -> str:
        return self.surface


ROOT = RootToken()

Head = Union[Entity, RootToken]


@dataclass(frozen=True)
class Triplet:
    """
    Tripleta (cabeza, relación, cola) con profundidad.

    Attributes
    ----------
    head : Entity or RootToken
        Entidad padre (``parent_of``) o cabeza del modificador.
    relation : RelationType
        Una de las cinco relaciones.
    tail : Entity
        Hijo o valor del modificador.
    depth : int
        0 solo cuando la cabeza es ``[root]``.
    head_history : bool
        Prefijo ``H:`` del nodo que encabeza la tripleta.
    tail_history : bool
        Prefijo ``H:`` del hijo en las tripletas ``parent_of``; False en el resto.
    source_node : int
        Índice en preorden del nodo que aporta la tripleta.
    """

    head: Head
    relation: RelationType
    tail: Entity
    depth: int
    head_history: bool = False
    tail_history: bool = False
    source_node: int = 0

    def __post_init__(self) -> None:
        if self.depth < 0:
            raise ValueError("La profundidad de una tripleta no puede ser negativa")
        if (self.depth == 0) != isinstance(self.head, RootToken):
            raise ValueError("Solo las tripletas con cabeza [root] tienen profundidad 0")
        if isinstance(self.head, RootToken) and self.relation is not RelationType.PARENT_OF:
            raise ValueError("[root] solo puede encabezar tripletas parent_of")

    @property
    def is_root(self) -> bool:
        return isinstance(self.head, RootToken)


@dataclass(frozen=True)
class TripletSet:
    """Tripletas de un caso en orden de emisión (preorden)."""

    triplets: Tuple[Triplet, ...]
    case_id: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "triplets", tuple(self.triplets))

    def __len__(self) -> int:
        return len(self.triplets)

    def __iter__(self) -> Iterator[Triplet]:
        return iter(self.triplets)

    def __getitem__(self, index: int) -> Triplet:
        return self.triplets[index]


def _modifier_triplets(
    head: Entity,
    modifier: Modifier,
    depth: int,
    history: bool,
    source: int,
) -> Iterator[Triplet]:
    yield Triplet(head, modifier.relation, modifier.value, depth, history, False, source)
    for anidado in modifier.nested:
        yield Triplet(modifier.value, anidado.relation, anidado.value, depth, False, False, source)


def decompose(forest: CausalForest) -> TripletSet:
    """
    Descompone un bosque en su conjunto de tripletas.

    Por cada nodo, en preorden, se emite su tripleta ``parent_of`` y después
    las de sus modificadores (cada una seguida de sus anidadas).

    Parameters
    ----------
    forest : CausalForest
        Bosque válido.

    Returns
    -------
    TripletSet
        Tantas tripletas ``parent_of`` como nodos tiene el bosque.

    Examples
    --------
    >>> from arbolcausal.formato import load_forest
    >>> ts = decompose(load_forest("A\\n  B"))
    >>> [(str(t.head), t.relation.value, str(t.tail), t.depth) for t in ts]
    [('[root]', 'parent_of', 'A', 0), ('A', 'parent_of', 'B', 1)]
    """
    tripletas: List[Triplet] = []
    # (nodo, cabeza del padre, profundidad del padre, H: del padre)
    pila: List[Tuple[Node, Head, int, bool]] = [(raiz, ROOT, 0, False) for raiz in reversed(forest.roots)]
    indice = 0
    while pila:
        nodo, padre, profundidad_padre, historia_padre = pila.pop()
        profundidad = profundidad_padre + 1
        tripletas.append(
            Triplet(
                padre,
                RelationType.PARENT_OF,
                nodo.head,
                profundidad_padre,
                historia_padre,
                nodo.history,
                indice,
            )
        )
        for modificador in nodo.modifiers:
            tripletas.extend(_modifier_triplets(nodo.head, modificador, profundidad, nodo.history, indice))
        pila.extend((hijo, nodo.head, profundidad, nodo.history) for hijo in reversed(nodo.children))
        indice += 1
    return TripletSet(tuple(tripletas), forest.case_id)


def root_triplets(ts: TripletSet) -> TripletSet:
    """Filtra las tripletas con cabeza ``[root]`` (evaluación solo de raíces)."""
    return TripletSet(tuple(t for t in ts if t.is_root), ts.case_id)
