"""
Analizador del formato de texto indentado de los árboles causales.

Cada línea no vacía es un nodo; la indentación indica la profundidad y, por
tanto, la relación ``parent_of`` con la línea anterior de un nivel menos.

Gramática de una línea (de menor a mayor precedencia)::

    linea  := ["H:"] [grupo "="] cuerpo
    cuerpo := grupo (("@" | "/") grupo)*
    grupo  := entidad ("＊" entidad)*

``=`` aparece como máximo una vez y separa la prueba del resto. ``@`` y ``/``
se leen de izquierda a derecha y cada uno une el grupo siguiente a la cabeza.
``＊`` es el operador más fuerte y su cabeza es la entidad de la derecha
(``泡沫状 ＊ 痰`` tiene cabeza ``痰``).
"""

import re
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field

from ..errores import ParseError
from .modelo import (
    FEATURED_ALIAS,
    FEATURED_SYMBOL,
    HISTORY_PREFIX,
    LOCATED_SYMBOL,
    POLARITY_SYMBOL,
    RELATION_BY_SYMBOL,
    TESTED_SYMBOL,
    CausalForest,
    DiagnosticCode,
    Entity,
    Modifier,
    Node,
    ParseDiagnostic,
    RelationType,
    Severity,
)

_BODY_OPERATORS = re.compile(f"([{re.escape(LOCATED_SYMBOL)}{re.escape(POLARITY_SYMBOL)}])")
_TAB = "\t"
_SPACE = " "


class ParseOptions(BaseModel):
    """
    Política de indentación del analizador.

    Parameters
    ----------
    indent_width : int
        Número de espacios por nivel cuando el documento se indenta con espacios.
    allow_tabs : bool
        Aceptar un tabulador por nivel como alternativa (nunca mezclado con espacios).
    """

    model_config = ConfigDict(frozen=True)

    indent_width: int = Field(default=2, ge=1, le=16)
    allow_tabs: bool = True


DEFAULT_PARSE_OPTIONS = ParseOptions()


def _error(line_number: int, code: DiagnosticCode, message: str) -> ParseDiagnostic:
    return ParseDiagnostic(line_number, Severity.ERROR, message, code)


def _parse_group(texto: str, line_number: int) -> Union[List[Entity], ParseDiagnostic]:
    """Divide un grupo ``a ＊ b ＊ c`` en entidades; la última es la cabeza."""
    entidades = []
    for operando in texto.split(FEATURED_SYMBOL):
        operando = operando.strip()
        if not operando:
            return _error(
                line_number,
                DiagnosticCode.EMPTY_OPERAND,
                f"Operando vacío junto a {FEATURED_SYMBOL!r}"
                if FEATURED_SYMBOL in texto
                else "Operando vacío",
            )
        try:
            entidades.append(Entity(operando))
        except ValueError as exc:
            return _error(line_number, DiagnosticCode.INVALID_ENTITY, str(exc))
    return entidades


def _featured(entidades: Sequence[Entity]) -> Tuple[Modifier, ...]:
    return tuple(Modifier(RelationType.FEATURED, e) for e in entidades)


def parse_node_line(line: str, line_number: int = 1) -> Union[Node, ParseDiagnostic]:
    """
    Analiza una línea (sin indentación) y devuelve un nodo sin hijos.

    Parameters
    ----------
    line : str
        Contenido de la línea. Se acepta ``*`` de ancho medio como alias de ``＊``.
    line_number : int, optional
        Número de línea que se usará en el diagnóstico, por defecto 1.

    Returns
    -------
    Node or ParseDiagnostic
        El nodo, o el primer error encontrado en la línea.

    Examples
    --------
    >>> nodo = parse_node_line("SpO2 / 低値")
    >>> nodo.head.surface, nodo.modifiers[0].value.surface
    ('SpO2', '低値')
    """
    texto = line.strip()
    history = False
    if texto.startswith(HISTORY_PREFIX):
        history = True
        texto = texto[len(HISTORY_PREFIX):].strip()
    if not texto:
        return _error(line_number, DiagnosticCode.EMPTY_OPERAND, "Línea sin entidad cabeza")

    texto = texto.replace(FEATURED_ALIAS, FEATURED_SYMBOL)
    partes = texto.split(TESTED_SYMBOL)
    if len(partes) > 2:
        return _error(
            line_number,
            DiagnosticCode.MULTIPLE_TESTS,
            f"Más de un {TESTED_SYMBOL!r} en la línea",
        )

    modificadores: List[Modifier] = []
    cuerpo = partes[-1]
    if len(partes) == 2:
        prueba = partes[0]
        if not prueba.strip():
            return _error(line_number, DiagnosticCode.EMPTY_OPERAND, f"Prueba vacía antes de {TESTED_SYMBOL!r}")
        if _BODY_OPERATORS.search(prueba):
            return _error(
                line_number,
                DiagnosticCode.MISPLACED_OPERATOR,
                f"La prueba antes de {TESTED_SYMBOL!r} no admite @ ni /",
            )
        grupo = _parse_group(prueba, line_number)
        if isinstance(grupo, ParseDiagnostic):
            return grupo
        modificadores.append(Modifier(RelationType.TESTED, grupo[-1], _featured(grupo[:-1])))

    segmentos = _BODY_OPERATORS.split(cuerpo)
    cabeza = _parse_group(segmentos[0], line_number)
    if isinstance(cabeza, ParseDiagnostic):
        return cabeza
    modificadores.extend(_featured(cabeza[:-1]))

    for simbolo, texto_grupo in zip(segmentos[1::2], segmentos[2::2]):
        if not texto_grupo.strip():
            return _error(line_number, DiagnosticCode.EMPTY_OPERAND, f"Operando vacío tras {simbolo!r}")
        grupo = _parse_group(texto_grupo, line_number)
        if isinstance(grupo, ParseDiagnostic):
            return grupo
        relacion = RELATION_BY_SYMBOL[simbolo]
        if relacion is RelationType.POLARITY and len(grupo) > 1:
            return _error(
                line_number,
                DiagnosticCode.NESTED_POLARITY,
                "El valor de polaridad debe ser una sola entidad",
            )
        modificadores.append(Modifier(relacion, grupo[-1], _featured(grupo[:-1])))

    return Node(cabeza[-1], history, tuple(modificadores))


@dataclass(frozen=True)
class ScannedLine:
    """Línea no vacía del documento tras el análisis de indentación."""

    line_number: int
    raw: str
    indent: str
    level: int
    node: Optional[Node]


@dataclass(frozen=True)
class ScanResult:
    lines: Tuple[ScannedLine, ...]
    blank_lines: Tuple[int, ...]
    diagnostics: Tuple[ParseDiagnostic, ...]


def split_lines(text: str) -> List[str]:
    """Divide en líneas aceptando LF y CRLF; el salto final no crea línea vacía."""
    lineas = text.replace("\r\n", "\n").split("\n")
    if len(lineas) > 1 and lineas[-1] == "":
        lineas.pop()
    return lineas


def scan_document(text: str, options: Optional[ParseOptions] = None) -> ScanResult:
    """
    Analiza indentación y líneas de un documento sin construir el bosque.

    Recoge todos los errores en lugar de detenerse en el primero; las líneas
    con error quedan con ``node=None`` y su nivel se conserva para seguir
    comprobando las siguientes.
    """
    options = options or DEFAULT_PARSE_OPTIONS
    diagnosticos: List[ParseDiagnostic] = []
    escaneadas: List[ScannedLine] = []
    blancas: List[int] = []
    estilo: Optional[str] = None
    nivel_previo = -1

    for numero, raw in enumerate(split_lines(text), start=1):
        if not raw.strip():
            blancas.append(numero)
            continue
        contenido = raw.lstrip(" \t")
        indent = raw[: len(raw) - len(contenido)]
        if contenido[:1].isspace():
            diagnosticos.append(
                _error(
                    numero,
                    DiagnosticCode.MISALIGNED_INDENT,
                    f"Indentación con un espacio no admitido (U+{ord(contenido[0]):04X}); "
                    "use espacios ASCII o tabuladores",
                )
            )
        nivel = 0
        if indent:
            caracteres = set(indent)
            if len(caracteres) > 1:
                diagnosticos.append(
                    _error(numero, DiagnosticCode.MIXED_INDENT, "Tabuladores y espacios mezclados en la indentación")
                )
            elif estilo is not None and caracteres != {estilo}:
                diagnosticos.append(
                    _error(numero, DiagnosticCode.MIXED_INDENT, "El documento mezcla indentación con tabuladores y espacios")
                )
            elif _TAB in caracteres and not options.allow_tabs:
                diagnosticos.append(
                    _error(numero, DiagnosticCode.MIXED_INDENT, "No se admiten tabuladores en la indentación")
                )
            else:
                estilo = estilo or indent[0]
            if estilo == _SPACE and _TAB not in indent and len(indent) % options.indent_width:
                diagnosticos.append(
                    _error(
                        numero,
                        DiagnosticCode.MISALIGNED_INDENT,
                        f"La indentación ({len(indent)} espacios) no es múltiplo de {options.indent_width}",
                    )
                )
            nivel = len(indent) if _TAB in indent else len(indent) // options.indent_width
            nivel = max(nivel, 1)

        if nivel > nivel_previo + 1:
            diagnosticos.append(
                _error(
                    numero,
                    DiagnosticCode.INDENT_JUMP,
                    f"Salto de indentación del nivel {max(nivel_previo, 0)} al nivel {nivel}",
                )
            )
            nivel = nivel_previo + 1
        nivel_previo = nivel

        resultado = parse_node_line(contenido, numero)
        if isinstance(resultado, ParseDiagnostic):
            diagnosticos.append(resultado)
            resultado = None
        escaneadas.append(ScannedLine(numero, raw, indent, nivel, resultado))

    if not escaneadas:
        diagnosticos.append(_error(1, DiagnosticCode.EMPTY_DOCUMENT, "El documento no contiene nodos"))

    diagnosticos.sort(key=lambda d: d.line_number)
    return ScanResult(tuple(escaneadas), tuple(blancas), tuple(diagnosticos))


def _build_roots(lineas: Sequence[ScannedLine]) -> List[Node]:
    """Construye los nodos inmutables de abajo arriba con una pila explícita."""
    raices: List[Node] = []
    pila: List[Tuple[int, Node, List[Node]]] = []

    def cerrar() -> None:
        _, nodo, hijos = pila.pop()
        terminado = nodo.with_children(tuple(hijos))
        (pila[-1][2] if pila else raices).append(terminado)

    for linea in lineas:
        assert linea.node is not None
        while pila and pila[-1][0] >= linea.level:
            cerrar()
        pila.append((linea.level, linea.node, []))
    while pila:
        cerrar()
    return raices


def parse_forest(
    text: str,
    options: Optional[ParseOptions] = None,
    case_id: str = "",
) -> Union[CausalForest, List[ParseDiagnostic]]:
    """
    Analiza un documento completo.

    Parameters
    ----------
    text : str
        Documento con una línea por nodo. Se aceptan LF y CRLF; las líneas en
        blanco se ignoran.
    options : ParseOptions, optional
        Política de indentación. Por defecto dos espacios por nivel.
    case_id : str, optional
        Identificador del caso que se guardará en el bosque.

    Returns
    -------
    CausalForest or list of ParseDiagnostic
        El bosque, o una lista no vacía con todos los errores (nunca ambos).

    Examples
    --------
    >>> bosque = parse_forest("急性心筋梗塞\\n  完全閉塞 @ 冠動脈")
    >>> bosque.roots[0].children[0].head.surface
    '完全閉塞'
    """
    escaneo = scan_document(text, options)
    if escaneo.diagnostics:
        return list(escaneo.diagnostics)
    return CausalForest(tuple(_build_roots(escaneo.lines)), case_id)


def load_forest(text: str, options: Optional[ParseOptions] = None, case_id: str = "") -> CausalForest:
    """
    Igual que :func:`parse_forest`, pero lanza ``ParseError`` si hay errores.

    Raises
    ------
    ParseError
        Con la lista completa de diagnósticos en ``exc.diagnostics``.
    """
    resultado = parse_forest(text, options, case_id)
    if isinstance(resultado, CausalForest):
        return resultado
    raise ParseError(resultado, case_id)
