"""
Jerarquía de excepciones de arbolcausal.

Todas heredan de ``ValueError``: son errores en los datos de entrada, no en el
entorno. Los errores de E/S se dejan como ``OSError``.
"""

from typing import Iterable, Sequence, TYPE_CHECKING

if TYPE_CHECKING:
    from .formato.modelo import ParseDiagnostic


class ParseError(ValueError):
    """El texto de un árbol no pudo analizarse; conserva los diagnósticos."""

    def __init__(self, diagnostics: "Sequence[ParseDiagnostic]", case_id: str = "") -> None:
        self.diagnostics = tuple(diagnostics)
        self.case_id = case_id
        primero = self.diagnostics[0] if self.diagnostics else None
        detalle = f": línea {primero.line_number}: {primero.message}" if primero else ""
        prefijo = f"[{case_id}] " if case_id else ""
        super().__init__(
            f"{prefijo}{len(self.diagnostics)} error(es) de formato{detalle}"
        )


class CorpusError(ValueError):
    """Corpus inconsistente: ids duplicados, predicciones sin gold, registros inválidos."""

    def __init__(self, message: str, case_ids: Iterable[str] = ()) -> None:
        self.case_ids = tuple(case_ids)
        if self.case_ids:
            message = f"{message}: {', '.join(self.case_ids)}"
        super().__init__(message)


class ContractError(ValueError):
    """Un alineamiento no corresponde a los conjuntos de tripletas evaluados."""


class CorrelationError(ValueError):
    """La correlación no está definida para las entradas dadas."""


class LengthMismatchError(CorrelationError):
    """Los vectores tienen longitudes distintas o menos de dos elementos."""


class ConstantInputError(CorrelationError):
    """Uno de los vectores es constante (desviación típica nula)."""


class MissingManualScoreError(ValueError):
    """Faltan puntuaciones manuales para algunos casos."""

    def __init__(self, case_ids: Iterable[str]) -> None:
        self.case_ids = tuple(sorted(case_ids))
        super().__init__(
            "Faltan puntuaciones manuales para los casos: " + ", ".join(self.case_ids)
        )
