"""
Lectura de corpus, puntuaciones manuales e informes previos.

Un corpus es un directorio de archivos ``*.tree`` (el id del caso es el nombre
del archivo sin extensión) o un archivo de registros JSON, uno por línea, con
los campos ``id``, ``tree`` y opcionalmente ``report``. Todo se lee en UTF-8.

Los errores de datos se señalan con ``CorpusError``; los de acceso a disco se
dejan propagar como ``OSError``.
"""

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Iterable, List, NamedTuple, Optional, Tuple, Union

from ..errores import CorpusError
from ..formato.modelo import CausalForest, Entity, ParseDiagnostic, RelationType
from ..formato.parser import ParseOptions, parse_forest
from ..logger import get_logger
from ..tripletas.descomposicion import ROOT, Triplet, TripletSet

logger = get_logger(__name__)

TREE_SUFFIX = ".tree"
REPORT_SCHEMA_VERSION = "1.0"

PathLike = Union[str, Path]


@dataclass(frozen=True)
class CorpusCase:
    case_id: str
    text: str
    report: Optional[str] = None


@dataclass(frozen=True)
class Corpus:
    """Casos de un corpus ordenados por ``case_id``."""

    name: str
    cases: Tuple[CorpusCase, ...]

    def __len__(self) -> int:
        return len(self.cases)


def _check_unique(casos: Iterable[CorpusCase], origen: PathLike) -> Tuple[CorpusCase, ...]:
    vistos: Dict[str, CorpusCase] = {}
    duplicados = set()
    for caso in casos:
        if caso.case_id in vistos:
            duplicados.add(caso.case_id)
        vistos[caso.case_id] = caso
    if duplicados:
        raise CorpusError(f"Ids de caso duplicados en {origen}", sorted(duplicados))
    return tuple(vistos[k] for k in sorted(vistos))


def _read_directory(path: Path) -> List[CorpusCase]:
    return [
        CorpusCase(archivo.stem, archivo.read_text(encoding="utf-8"))
        for archivo in sorted(path.glob(f"*{TREE_SUFFIX}"))
        if archivo.is_file()
    ]


def _read_records(path: Path) -> List[CorpusCase]:
    casos = []
    with path.open(encoding="utf-8") as fh:
        for numero, linea in enumerate(fh, start=1):
            if not linea.strip():
                continue
            try:
                registro = json.loads(linea)
            except json.JSONDecodeError as exc:
                raise CorpusError(f"{path}:{numero}: registro JSON inválido ({exc.msg})") from exc
            if not isinstance(registro, dict):
                raise CorpusError(f"{path}:{numero}: se esperaba un objeto JSON")
            case_id, tree = registro.get("id"), registro.get("tree")
            report = registro.get("report")
            if not isinstance(case_id, str) or not case_id:
                raise CorpusError(f"{path}:{numero}: falta el campo 'id' o no es una cadena")
            if not isinstance(tree, str):
                raise CorpusError(f"{path}:{numero}: falta el campo 'tree' o no es una cadena")
            if report is not None and not isinstance(report, str):
                raise CorpusError(f"{path}:{numero}: el campo 'report' debe ser una cadena")
            casos.append(CorpusCase(case_id, tree, report))
    return casos


def load_corpus(path: PathLike) -> Corpus:
    """
    Carga un corpus desde un directorio de ``*.tree`` o un archivo de registros.

    Raises
    ------
    FileNotFoundError
        Si la ruta no existe.
    CorpusError
        Si hay registros mal formados o ids repetidos.
    """
    ruta = Path(path)
    if ruta.is_dir():
        casos = _read_directory(ruta)
    elif ruta.is_file():
        casos = _read_records(ruta)
    else:
        raise FileNotFoundError(f"No existe el corpus: {ruta}")
    corpus = Corpus(ruta.stem or str(ruta), _check_unique(casos, ruta))
    logger.info("Corpus %s: %d casos", ruta, len(corpus))
    return corpus


def parse_corpus(
    corpus: Corpus,
    options: Optional[ParseOptions] = None,
) -> Tuple[List[CausalForest], Dict[str, List[ParseDiagnostic]]]:
    """
    Analiza todos los casos de un corpus.

    Returns
    -------
    (list of CausalForest, dict)
        Los bosques válidos en orden de ``case_id`` y los errores de los casos
        que no pudieron analizarse.
    """
    bosques: List[CausalForest] = []
    fallos: Dict[str, List[ParseDiagnostic]] = {}
    for caso in corpus.cases:
        resultado = parse_forest(caso.text, options, caso.case_id)
        if isinstance(resultado, CausalForest):
            bosques.append(resultado)
        else:
            fallos[caso.case_id] = resultado
    if fallos:
        logger.warning("%s: %d casos con errores de formato", corpus.name, len(fallos))
    return bosques, fallos


def read_manual_scores(path: PathLike) -> Dict[str, float]:
    """
    Lee puntuaciones manuales (0-100) de un TSV ``case_id<TAB>score``.

    Se admite una cabecera cuya segunda columna no sea numérica y se ignoran
    las líneas vacías y los comentarios ``#``.

    Raises
    ------
    CorpusError
        Con líneas mal formadas, puntuaciones fuera de rango o ids repetidos.
    """
    ruta = Path(path)
    puntuaciones: Dict[str, float] = {}
    primera = True
    with ruta.open(encoding="utf-8-sig") as fh:
        for numero, linea in enumerate(fh, start=1):
            linea = linea.rstrip("\r\n")
            if not linea.strip() or linea.lstrip().startswith("#"):
                continue
            columnas = [c.strip() for c in linea.split("\t")]
            if len(columnas) != 2 or not columnas[0]:
                raise CorpusError(f"{ruta}:{numero}: se esperaba 'case_id<TAB>score'")
            case_id, texto = columnas
            try:
                valor = float(texto)
            except ValueError:
                if primera:
                    primera = False
                    continue  # cabecera
                raise CorpusError(f"{ruta}:{numero}: puntuación no numérica {texto!r}") from None
            primera = False
            if not 0.0 <= valor <= 100.0:
                raise CorpusError(f"{ruta}:{numero}: la puntuación {valor:g} está fuera de [0, 100]")
            if case_id in puntuaciones:
                raise CorpusError(f"Puntuación manual duplicada en {ruta}", [case_id])
            puntuaciones[case_id] = valor
    logger.info("Puntuaciones manuales desde %s: %d casos", ruta, len(puntuaciones))
    return puntuaciones


class ScoreReport(NamedTuple):
    """F1 por caso de un informe de ``score`` y la configuración con que se calculó."""

    f1: Dict[str, float]
    config: Dict[str, Any]


def read_score_report(path: PathLike, weighted: bool = True) -> ScoreReport:
    """
    F1 por caso y bloque ``config`` de un informe JSON escrito por ``score --report``.

    Parameters
    ----------
    weighted : bool, optional
        Leer el F1 ponderado (por defecto) o el no ponderado.
    """
    ruta = Path(path)
    try:
        informe = json.loads(ruta.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise CorpusError(f"{ruta}: informe JSON inválido ({exc.msg})") from exc
    if not isinstance(informe, dict) or informe.get("schema_version") != REPORT_SCHEMA_VERSION:
        raise CorpusError(f"{ruta}: se esperaba un informe de puntuación con schema_version {REPORT_SCHEMA_VERSION}")
    seccion = informe.get("weighted" if weighted else "unweighted")
    try:
        f1 = {c["case_id"]: float(c["f1"]) for c in seccion["per_case"]}
    except (KeyError, TypeError) as exc:
        raise CorpusError(f"{ruta}: el informe no contiene puntuaciones por caso") from exc
    config = informe.get("config")
    return ScoreReport(f1=f1, config=dict(config) if isinstance(config, dict) else {})


TRIPLET_FIELDS = ("case_id", "head", "relation", "tail", "depth", "head_history", "tail_history")


def triplet_record(case_id: str, t: Triplet) -> Dict[str, object]:
    return {
        "case_id": case_id,
        "head": str(t.head),
        "relation": t.relation.value,
        "tail": t.tail.surface,
        "depth": t.depth,
        "head_history": t.head_history,
        "tail_history": t.tail_history,
        "source_node": t.source_node,
    }


def read_triplet_records(lines: Iterable[str]) -> List[TripletSet]:
    """
    Reconstruye los conjuntos de tripletas de un flujo de registros de ``decompose``.

    La cabeza de las tripletas de profundidad 0 es ``[root]``. Los registros sin
    ``source_node`` (p. ej. convertidos desde el TSV) se leen con nodo 0.
    """
    por_caso: Dict[str, List[Triplet]] = {}
    for numero, linea in enumerate(lines, start=1):
        if not linea.strip():
            continue
        try:
            r = json.loads(linea)
            case_id = str(r["case_id"])
            cabeza = ROOT if r["depth"] == 0 else Entity(r["head"])
            tripleta = Triplet(
                cabeza,
                RelationType(r["relation"]),
                Entity(r["tail"]),
                int(r["depth"]),
                bool(r["head_history"]),
                bool(r.get("tail_history", False)),
                int(r.get("source_node", 0)),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise CorpusError(f"registro {numero}: tripleta inválida ({exc})") from exc
        por_caso.setdefault(case_id, []).append(tripleta)
    return [TripletSet(tuple(ts), case_id) for case_id, ts in sorted(por_caso.items())]
