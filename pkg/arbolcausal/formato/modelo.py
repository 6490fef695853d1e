"""
Modelo en memoria de los árboles causales.

Un caso clínico se representa como un bosque (``CausalForest``) de nodos. Cada
nodo tiene una entidad cabeza, un indicador de antecedente (prefijo ``H:``),
modificadores intra-nodo y nodos hijos unidos por la relación ``parent_of``.

Todos los tipos son inmutables, comparables estructuralmente y seguros para
compartir entre hilos o procesos.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Tuple


class RelationType(str, Enum):
    """Las cinco relaciones del formato; enumeración cerrada."""

    PARENT_OF = "parent_of"
    LOCATED = "located"
    POLARITY = "polarity"
    TESTED = "tested"
    FEATURED = "featured"


# Símbolos canónicos de cada relación de modificación
LOCATED_SYMBOL = "@"
POLARITY_SYMBOL = "/"
TESTED_SYMBOL = "="
FEATURED_SYMBOL = "＊"  # ＊ de ancho completo
FEATURED_ALIAS = "*"
HISTORY_PREFIX = "H:"

RESERVED_SYMBOLS = frozenset(
    {LOCATED_SYMBOL, POLARITY_SYMBOL, TESTED_SYMBOL, FEATURED_SYMBOL, FEATURED_ALIAS}
)

SYMBOL_BY_RELATION = {
    RelationType.LOCATED: LOCATED_SYMBOL,
    RelationType.POLARITY: POLARITY_SYMBOL,
    RelationType.TESTED: TESTED_SYMBOL,
    RelationType.FEATURED: FEATURED_SYMBOL,
}

RELATION_BY_SYMBOL = {LOCATED_SYMBOL: RelationType.LOCATED, POLARITY_SYMBOL: RelationType.POLARITY}

MODIFIER_RELATIONS = frozenset(SYMBOL_BY_RELATION)


@dataclass(frozen=True)
class Entity:
    """
    Entidad médica (enfermedad, hallazgo, prueba, localización...).

    Parameters
    ----------
    surface : str
        Texto de la entidad, sin espacios al inicio ni al final.

    Raises
    ------
    ValueError
        Si la superficie está vacía, tiene espacios en los extremos, contiene un
        símbolo reservado, un salto de línea o un tabulador, o empieza por ``H:``.

    Examples
    --------
    >>> Entity("急性心筋梗塞")
    Entity(surface='急性心筋梗塞')
    """

    surface: str

    def __post_init__(self) -> None:
        surface = self.surface
        if not isinstance(surface, str) or not surface.strip():
            raise ValueError("La entidad no puede estar vacía")
        if surface != surface.strip():
            raise ValueError(f"La entidad tiene espacios en los extremos: {surface!r}")
        reservados = RESERVED_SYMBOLS.intersection(surface)
        if reservados:
            raise ValueError(
                f"La entidad {surface!r} contiene símbolos reservados: {''.join(sorted(reservados))}"
            )
        if any(c in surface for c in "\n\r\t"):
            raise ValueError(f"La entidad {surface!r} contiene saltos de línea o tabuladores")
        if surface.startswith(HISTORY_PREFIX):
            raise ValueError(f"La entidad {surface!r} no puede empezar por {HISTORY_PREFIX!r}")

    def __str__(self) -> str:
        return self.surface


@dataclass(frozen=True)
class Modifier:
    """
    Modificador intra-nodo: located (@), polarity (/), tested (=) o featured (＊).

    ``nested`` contiene los modificadores ``featured`` del propio valor, como
    ``右`` en ``右 ＊ 大脳半球``. Es el único anidamiento que expresa la sintaxis
    de línea, así que los anidados deben ser ``featured`` y sin anidamiento propio.
    """

    relation: RelationType
    value: Entity
    nested: Tuple["Modifier", ...] = ()

    def __post_init__(self) -> None:
        relation = RelationType(self.relation)
        object.__setattr__(self, "relation", relation)
        object.__setattr__(self, "nested", tuple(self.nested))
        if relation not in MODIFIER_RELATIONS:
            raise ValueError(f"Relación de modificador inválida: {relation.value}")
        if not self.nested:
            return
        if relation in (RelationType.POLARITY, RelationType.FEATURED):
            raise ValueError(f"Un modificador {relation.value} no admite modificadores anidados")
        for anidado in self.nested:
            if anidado.relation is not RelationType.FEATURED or anidado.nested:
                raise ValueError("Solo se admiten modificadores featured simples como anidados")


def _modifier_rank(modifier: Modifier) -> int:
    if modifier.relation is RelationType.TESTED:
        return 0
    if modifier.relation is RelationType.FEATURED:
        return 1
    return 2


@dataclass(frozen=True)
class Node:
    """
    Nodo del árbol causal.

    Los modificadores se guardan en orden canónico (tested, featured de la
    cabeza, located/polarity en orden de aparición); el orden relativo dentro de
    cada grupo se conserva.

    Parameters
    ----------
    head : Entity
        Entidad cabeza del nodo.
    history : bool, optional
        True si el nodo es un antecedente o tratamiento (prefijo ``H:``).
    modifiers : tuple of Modifier, optional
        Modificadores intra-nodo. Como máximo uno ``tested``.
    children : tuple of Node, optional
        Hijos en orden de aparición.
    """

    head: Entity
    history: bool = False
    modifiers: Tuple[Modifier, ...] = ()
    children: Tuple["Node", ...] = ()

    def __post_init__(self) -> None:
        modifiers = tuple(sorted(self.modifiers, key=_modifier_rank))
        object.__setattr__(self, "modifiers", modifiers)
        object.__setattr__(self, "children", tuple(self.children))
        tested = sum(1 for m in modifiers if m.relation is RelationType.TESTED)
        if tested > 1:
            raise ValueError("Un nodo admite como máximo un modificador tested")
        for m in modifiers:
            if m.relation is RelationType.FEATURED and m.nested:
                raise ValueError("Los featured de la cabeza no admiten anidados")

    @property
    def tested(self) -> "Modifier | None":
        """Modificador ``tested`` del nodo, si existe."""
        for m in self.modifiers:
            if m.relation is RelationType.TESTED:
                return m
        return None

    def with_children(self, children: Tuple["Node", ...]) -> "Node":
        """Copia del nodo con otros hijos."""
        return Node(self.head, self.history, self.modifiers, tuple(children))


@dataclass(frozen=True)
class CausalForest:
    """Bosque de árboles causales de un caso; al menos una raíz."""

    roots: Tuple[Node, ...]
    case_id: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "roots", tuple(self.roots))
        if not self.roots:
            raise ValueError("Un bosque causal necesita al menos una raíz")

    def iter_nodes(self) -> Iterator[Tuple[int, Node]]:
        """Recorre los nodos en profundidad (preorden) con su nivel (0 = raíz)."""
        pila = [(0, n) for n in reversed(self.roots)]
        while pila:
            nivel, nodo = pila.pop()
            yield nivel, nodo
            pila.extend((nivel + 1, hijo) for hijo in reversed(nodo.children))

    def count_nodes(self) -> int:
        return sum(1 for _ in self.iter_nodes())


class Severity(str, Enum):
    ERROR = "error"
    WARNING = "warning"


class DiagnosticCode(str, Enum):
    """Códigos de diagnóstico del analizador y del validador."""

    EMPTY_DOCUMENT = "EmptyDocument"
    INDENT_JUMP = "IndentJump"
    MIXED_INDENT = "MixedIndent"
    MISALIGNED_INDENT = "MisalignedIndent"
    EMPTY_OPERAND = "EmptyOperand"
    MULTIPLE_TESTS = "MultipleTests"
    MISPLACED_OPERATOR = "MisplacedOperator"
    NESTED_POLARITY = "NestedPolarity"
    INVALID_ENTITY = "InvalidEntity"
    # Avisos de formato no canónico
    NON_CANONICAL_SYMBOL = "NonCanonicalSymbol"
    NON_CANONICAL_SPACING = "NonCanonicalSpacing"
    NON_CANONICAL_INDENT = "NonCanonicalIndent"
    TRAILING_WHITESPACE = "TrailingWhitespace"
    BLANK_LINE = "BlankLine"


@dataclass(frozen=True)
class ParseDiagnostic:
    """Diagnóstico asociado a una línea (1-based) del documento."""

    line_number: int
    severity: Severity
    message: str
    code: DiagnosticCode

    @property
    def is_error(self) -> bool:
        return self.severity is Severity.ERROR

    def __str__(self) -> str:
        return f"línea {self.line_number}: {self.severity.value} {self.code.value}: {self.message}"
