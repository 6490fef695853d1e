"""
Validación completa de documentos: errores y avisos de formato no canónico.
"""

from typing import List, Optional

from .modelo import FEATURED_ALIAS, FEATURED_SYMBOL, DiagnosticCode, ParseDiagnostic, Severity
from .parser import ParseOptions, scan_document
from .serializador import DEFAULT_SERIALIZE_OPTIONS, serialize_node_line


def _warning(line_number: int, code: DiagnosticCode, message: str) -> ParseDiagnostic:
    return ParseDiagnostic(line_number, Severity.WARNING, message, code)


def validate(text: str, options: Optional[ParseOptions] = None) -> List[ParseDiagnostic]:
    """
    Devuelve todos los diagnósticos de un documento, sin detenerse en el primero.

    Los avisos de formato (espacios finales, símbolo ``*``, espaciado o
    indentación no canónicos, líneas en blanco) solo se emiten para líneas
    que se analizan sin error.

    Returns
    -------
    list of ParseDiagnostic
        Vacía si y solo si el documento se analiza y ya está en forma canónica.

    Examples
    --------
    >>> validate("急性心筋梗塞\\n  胸痛")
    []
    >>> [d.code.value for d in validate("A @ ")]
    ['EmptyOperand']
    """
    escaneo = scan_document(text, options)
    diagnosticos = list(escaneo.diagnostics)
    con_error = {d.line_number for d in diagnosticos}
    indent_canonica = DEFAULT_SERIALIZE_OPTIONS.indent
    aviso_indent = False

    for numero in escaneo.blank_lines:
        diagnosticos.append(_warning(numero, DiagnosticCode.BLANK_LINE, "Línea en blanco"))

    for linea in escaneo.lines:
        if linea.line_number in con_error or linea.node is None:
            continue
        contenido = linea.raw[len(linea.indent):]
        if contenido != contenido.rstrip():
            diagnosticos.append(
                _warning(linea.line_number, DiagnosticCode.TRAILING_WHITESPACE, "Espacios al final de la línea")
            )
        if FEATURED_ALIAS in contenido:
            diagnosticos.append(
                _warning(
                    linea.line_number,
                    DiagnosticCode.NON_CANONICAL_SYMBOL,
                    f"Se usa {FEATURED_ALIAS!r} en lugar de {FEATURED_SYMBOL!r}",
                )
            )
        canonica = serialize_node_line(linea.node)
        if canonica != contenido.rstrip().replace(FEATURED_ALIAS, FEATURED_SYMBOL):
            diagnosticos.append(
                _warning(
                    linea.line_number,
                    DiagnosticCode.NON_CANONICAL_SPACING,
                    f"Espaciado no canónico; se esperaba {canonica!r}",
                )
            )
        if linea.indent and linea.indent != indent_canonica * linea.level and not aviso_indent:
            aviso_indent = True
            diagnosticos.append(
                _warning(
                    linea.line_number,
                    DiagnosticCode.NON_CANONICAL_INDENT,
                    "La indentación canónica es de dos espacios por nivel",
                )
            )

    diagnosticos.sort(key=lambda d: (d.line_number, d.severity is not Severity.ERROR))
    return diagnosticos
