"""
Formato de texto indentado de los árboles causales.

Este paquete define el modelo en memoria (entidades, modificadores, nodos y
bosques) y las operaciones de análisis, serialización y validación del formato
de una línea por nodo.
"""

from .modelo import (
    RelationType,
    Entity,
    Modifier,
    Node,
    CausalForest,
    ParseDiagnostic,
    DiagnosticCode,
    Severity,
    HISTORY_PREFIX,
    RESERVED_SYMBOLS,
)
from .parser import ParseOptions, parse_node_line, parse_forest, load_forest, scan_document
from .serializador import SerializeOptions, serialize_node_line, serialize_forest
from .validador import validate

__all__ = [
    "RelationType",
    "Entity",
    "Modifier",
    "Node",
    "CausalForest",
    "ParseDiagnostic",
    "DiagnosticCode",
    "Severity",
    "HISTORY_PREFIX",
    "RESERVED_SYMBOLS",
    "ParseOptions",
    "parse_node_line",
    "parse_forest",
    "load_forest",
    "scan_document",
    "SerializeOptions",
    "serialize_node_line",
    "serialize_forest",
    "validate",
]
