"""
Configuración efectiva de una ejecución y construcción de informes.

Todo informe JSON lleva ``schema_version`` y la configuración efectiva sin el
número de procesos, de modo que dos ejecuciones con distinto paralelismo
producen exactamente los mismos bytes.
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Literal, Mapping, Optional, Sequence, TextIO

from pydantic import BaseModel, ConfigDict, Field

from ..config import settings
from ..emparejamiento.distancia import MatchConfig
from ..emparejamiento.tesauro import Thesaurus
from ..metricas.barrido import SweepTable
from ..metricas.ponderacion import WeightMethod, WeightScheme
from ..metricas.puntuacion import CaseAlignment, CorpusScore
from ..tripletas.descomposicion import Triplet
from ..tripletas.estadisticas import StatsReport
from .corpus import REPORT_SCHEMA_VERSION

OutputFormat = Literal["text", "records"]


class RunConfig(BaseModel):
    """
    Configuración efectiva de una orden.

    Los valores por defecto vienen de ``settings`` (variables de entorno,
    ``.env``) y las opciones de la línea de comandos los sustituyen.
    """

    model_config = ConfigDict(frozen=True)

    threshold: float = Field(default=0.5, gt=0.0, le=1.0)
    method: WeightMethod = WeightMethod.RECIPROCAL
    c: float = Field(default=2.0, gt=0.0)
    root_only: bool = False
    thesaurus: Optional[Path] = None
    unicode_normalize: bool = True
    jobs: int = Field(default=1, ge=1, le=64)
    format: OutputFormat = "text"

    @classmethod
    def from_settings(cls, **overrides: Any) -> "RunConfig":
        """Valores de ``settings`` con las opciones no nulas de ``overrides``."""
        base: Dict[str, Any] = {
            "threshold": settings.evaluation.threshold,
            "method": settings.evaluation.method,
            "c": settings.evaluation.c,
            "thesaurus": settings.evaluation.thesaurus,
            "unicode_normalize": settings.evaluation.unicode_normalize,
            "jobs": settings.performance.max_workers,
        }
        base.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**base)

    @property
    def match_config(self) -> MatchConfig:
        return MatchConfig(threshold=self.threshold, unicode_normalize=self.unicode_normalize)

    @property
    def scheme(self) -> WeightScheme:
        return WeightScheme(method=self.method, c=self.c)

    def load_thesaurus(self) -> Thesaurus:
        return Thesaurus.load(self.thesaurus)

    def echo(self) -> Dict[str, Any]:
        """Configuración que se incrusta en los informes (sin ``jobs``)."""
        return self.model_dump(mode="json", exclude={"jobs"})


def to_json(document: Mapping[str, Any]) -> str:
    return json.dumps(document, ensure_ascii=False, indent=2) + "\n"


def to_json_line(record: Mapping[str, Any]) -> str:
    return json.dumps(record, ensure_ascii=False) + "\n"


def tsv_value(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def write_json(document: Mapping[str, Any], path: Path) -> None:
    path.write_text(to_json(document), encoding="utf-8", newline="\n")


def _envelope(command: str, config: RunConfig) -> Dict[str, Any]:
    return {"schema_version": REPORT_SCHEMA_VERSION, "command": command, "config": config.echo()}


def format_triplet(t: Triplet) -> str:
    historia = ("H:" if t.head_history else "", "H:" if t.tail_history else "")
    return f"({historia[0]}{t.head}, {t.relation.value}, {historia[1]}{t.tail}, d{t.depth})"


def alignment_details(caso: CaseAlignment) -> Dict[str, Any]:
    return {
        "pairs": [
            {
                "pred": format_triplet(caso.pred[p.pred_index]),
                "gold": format_triplet(caso.gold[p.gold_index]),
                "cost": round(p.cost, 12),
            }
            for p in sorted(caso.alignment.pairs, key=lambda p: p.gold_index)
        ],
        "unmatched_pred": [format_triplet(caso.pred[i]) for i in caso.alignment.unmatched_pred],
        "unmatched_gold": [format_triplet(caso.gold[i]) for i in caso.alignment.unmatched_gold],
    }


def score_report(
    config: RunConfig,
    weighted: CorpusScore,
    unweighted: CorpusScore,
    aligned: Optional[Sequence[CaseAlignment]] = None,
) -> Dict[str, Any]:
    """Informe de ``score``; con ``aligned`` añade el detalle de cada alineamiento."""
    informe = _envelope("score", config)
    informe["weighted"] = weighted.model_dump(mode="json")
    informe["unweighted"] = unweighted.model_dump(mode="json")
    if aligned is not None:
        informe["alignments"] = {caso.case_id: alignment_details(caso) for caso in aligned}
    return informe


def stats_report(config: RunConfig, reports: Mapping[str, StatsReport]) -> Dict[str, Any]:
    informe = _envelope("stats", config)
    informe["corpora"] = {
        nombre: {
            **r.model_dump(mode="json"),
            "mean_triplets_per_case": r.mean_triplets_per_case,
            "mean_roots_per_case": r.mean_roots_per_case,
        }
        for nombre, r in reports.items()
    }
    return informe


def correlation_report(
    config: RunConfig,
    automatic: Sequence[float],
    manual: Sequence[float],
    coefficients: Mapping[str, float],
    source_config: Optional[Mapping[str, Any]] = None,
) -> Dict[str, Any]:
    """Con ``source_config`` se incrusta la configuración del informe de ``score`` de origen."""
    informe = _envelope("correlate", config)
    if source_config is not None:
        informe["source_config"] = dict(source_config)
    informe["cases"] = len(automatic)
    informe["mean_automatic"] = sum(automatic) / len(automatic) if automatic else 0.0
    informe["mean_manual"] = sum(manual) / len(manual) if manual else 0.0
    informe["coefficients"] = dict(coefficients)
    return informe


def sweep_report(config: RunConfig, table: SweepTable) -> Dict[str, Any]:
    informe = _envelope("sweep", config)
    informe["table"] = table.model_dump(mode="json")
    return informe


# Salida de texto


def _fila(nombre: str, p: float, r: float, f: float) -> str:
    return f"{nombre:<20}{p:>10.4f}{r:>10.4f}{f:>10.4f}"


def _cabecera(titulo: str = "") -> str:
    return f"{titulo:<20}{'precision':>10}{'recall':>10}{'f1':>10}"


def write_config_line(config: RunConfig, out: TextIO) -> None:
    eco = config.echo()
    out.write("# " + " ".join(f"{k}={eco[k]}" for k in sorted(eco)) + "\n")


def write_score_text(
    config: RunConfig,
    weighted: CorpusScore,
    unweighted: CorpusScore,
    out: TextIO,
    aligned: Optional[Sequence[CaseAlignment]] = None,
) -> None:
    """Resumen micro/macro, desglose por relación y tabla por caso."""
    write_config_line(config, out)
    out.write(_cabecera() + "\n")
    for etiqueta, total in ((weighted.scheme.label, weighted), ("none", unweighted)):
        out.write(_fila(f"{etiqueta} micro", total.micro.precision, total.micro.recall, total.micro.f1) + "\n")
        out.write(_fila(f"{etiqueta} macro", total.macro.precision, total.macro.recall, total.macro.f1) + "\n")
    out.write("\n" + _cabecera("relation") + "\n")
    for relacion, s in weighted.per_relation.items():
        out.write(_fila(relacion, s.precision, s.recall, s.f1) + f"  ({s.gold_count} gold)\n")
    out.write("\n" + _cabecera("case") + "  flags\n")
    detalles = {c.case_id: c for c in aligned} if aligned is not None else {}
    for caso in weighted.per_case:
        out.write(_fila(caso.case_id, caso.precision, caso.recall, caso.f1))
        out.write(f"  {','.join(caso.flags)}\n" if caso.flags else "\n")
        if caso.case_id in detalles:
            _write_alignment_text(detalles[caso.case_id], out)


def _write_alignment_text(caso: CaseAlignment, out: TextIO) -> None:
    d = alignment_details(caso)
    for par in d["pairs"]:
        out.write(f"    = {par['pred']} ~ {par['gold']} cost={par['cost']:.4f}\n")
    for t in d["unmatched_gold"]:
        out.write(f"    - {t}\n")
    for t in d["unmatched_pred"]:
        out.write(f"    + {t}\n")


def write_stats_text(reports: Mapping[str, StatsReport], out: TextIO) -> None:
    nombres = list(reports)
    columnas = "".join(f"{n:>16}" for n in nombres)
    out.write(f"{'':<24}{columnas}\n")

    def fila(etiqueta: str, valores: List[Any]) -> None:
        celdas = "".join(f"{v:>16.2f}" if isinstance(v, float) else f"{v:>16}" for v in valores)
        out.write(f"{etiqueta:<24}{celdas}\n")

    rs = [reports[n] for n in nombres]
    fila("Cases", [r.cases for r in rs])
    fila("Triplets", [r.triplets for r in rs])
    fila("Triplets (no root)", [r.triplets_without_root for r in rs])
    fila("Root node", [r.roots for r in rs])
    fila("Nodes", [r.nodes for r in rs])
    fila("History nodes", [r.history_nodes for r in rs])
    for relacion in rs[0].per_relation if rs else ():
        fila(relacion, [r.per_relation[relacion] for r in rs])
    fila("Triplets / case", [r.mean_triplets_per_case for r in rs])
    fila("Roots / case", [r.mean_roots_per_case for r in rs])
    fila("Max depth", [r.max_depth for r in rs])
    profundidades = sorted({d for r in rs for d in r.depth_histogram})
    for d in profundidades:
        fila(f"depth {d}", [r.depth_histogram.get(d, 0) for r in rs])


def write_sweep_text(table: SweepTable, out: TextIO) -> None:
    out.write(f"{'method':<14}{'C':>8}{table.correlation:>14}\n")
    for celda in table.cells:
        c = "-" if celda.c is None else f"{celda.c:g}"
        valor = "undefined" if celda.correlation is None else f"{celda.correlation:.6f}"
        out.write(f"{celda.method.value:<14}{c:>8}{valor:>14}\n")
