"""
Serialización canónica de los bosques causales al formato indentado.
"""

from typing import Iterable, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from .modelo import (
    FEATURED_SYMBOL,
    HISTORY_PREFIX,
    SYMBOL_BY_RELATION,
    TESTED_SYMBOL,
    CausalForest,
    Entity,
    Modifier,
    Node,
    RelationType,
)


class SerializeOptions(BaseModel):
    """Opciones de salida: unidad de indentación y salto de línea final."""

    model_config = ConfigDict(frozen=True)

    indent: str = Field(default="  ", description="Unidad de indentación por nivel")
    trailing_newline: bool = False

    @field_validator("indent")
    @classmethod
    def validate_indent(cls, v: str) -> str:
        if v != "\t" and (not v or set(v) != {" "}):
            raise ValueError("La indentación debe ser un tabulador o uno o más espacios")
        return v


DEFAULT_SERIALIZE_OPTIONS = SerializeOptions()


def _chain(featured: Iterable[Modifier], head: Entity) -> str:
    superficies = [m.value.surface for m in featured] + [head.surface]
    return f" {FEATURED_SYMBOL} ".join(superficies)


def serialize_node_line(node: Node) -> str:
    """
    Forma canónica de la línea de un nodo (sin indentación).

    Examples
    --------
    >>> from arbolcausal.formato import parse_node_line
    >>> serialize_node_line(parse_node_line("MRI=DWI高信号@右*大脳半球"))
    'MRI = DWI高信号 @ 右 ＊ 大脳半球'
    """
    partes = [HISTORY_PREFIX] if node.history else []
    prueba = node.tested
    if prueba is not None:
        partes.append(f"{_chain(prueba.nested, prueba.value)} {TESTED_SYMBOL} ")

    featured = [m for m in node.modifiers if m.relation is RelationType.FEATURED]
    partes.append(_chain(featured, node.head))

    for m in node.modifiers:
        if m.relation in (RelationType.LOCATED, RelationType.POLARITY):
            partes.append(f" {SYMBOL_BY_RELATION[m.relation]} {_chain(m.nested, m.value)}")
    return "".join(partes)


def serialize_forest(forest: CausalForest, options: Optional[SerializeOptions] = None) -> str:
    """
    Emite el texto canónico de un bosque: preorden, una línea por nodo.

    Parameters
    ----------
    forest : CausalForest
        Bosque a serializar.
    options : SerializeOptions, optional
        Por defecto dos espacios por nivel y sin salto de línea final.

    Returns
    -------
    str
        Texto tal que ``parse_forest(serialize_forest(f)) == f``.

    Examples
    --------
    >>> from arbolcausal.formato import Entity, Node, CausalForest
    >>> bosque = CausalForest((Node(Entity("急性心筋梗塞"), children=(Node(Entity("胸痛")),)),))
    >>> serialize_forest(bosque)
    '急性心筋梗塞\\n  胸痛'
    """
    options = options or DEFAULT_SERIALIZE_OPTIONS
    lineas = [options.indent * nivel + serialize_node_line(nodo) for nivel, nodo in forest.iter_nodes()]
    texto = "\n".join(lineas)
    return texto + "\n" if options.trailing_newline else texto
