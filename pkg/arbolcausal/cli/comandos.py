"""
Órdenes de la línea de comandos.

Cada orden devuelve el código de salida: 0 si todo fue bien, 1 ante errores
en los datos (formato, ids, puntuaciones) y 2 ante errores de entrada/salida.
Los informes se escriben en ``out`` y los mensajes de error en ``err``.
"""

import functools
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, TextIO, Tuple, Union

from ..errores import CorpusError, MissingManualScoreError
from ..formato.modelo import ParseDiagnostic
from ..formato.validador import validate
from ..logger import case_logger, get_logger
from ..metricas.barrido import DEFAULT_C_GRID, DEFAULT_METHODS, sweep_aligned
from ..metricas.correlacion import CORRELATIONS
from ..metricas.ponderacion import UNWEIGHTED, WeightMethod
from ..metricas.puntuacion import CaseAlignment, aggregate, align_corpus, pair_cases
from ..tripletas.descomposicion import TripletSet, decompose, root_triplets
from ..tripletas.estadisticas import StatsReport, forest_stats
from . import informes
from .corpus import (
    TRIPLET_FIELDS,
    load_corpus,
    parse_corpus,
    read_manual_scores,
    read_score_report,
    triplet_record,
)
from .informes import RunConfig

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_DATA = 1
EXIT_IO = 2

UNPARSEABLE_PREDICTION = "unparseable_prediction"

PathLike = Union[str, Path]


def _streams(out: Optional[TextIO], err: Optional[TextIO]) -> Tuple[TextIO, TextIO]:
    return out or sys.stdout, err or sys.stderr


def con_codigo_de_salida(func: Callable[..., int]) -> Callable[..., int]:
    """Traduce las excepciones de una orden a su código de salida."""

    @functools.wraps(func)
    def envoltorio(*args, **kwargs) -> int:
        err = kwargs.get("err") or sys.stderr
        try:
            return func(*args, **kwargs)
        except UnicodeDecodeError as exc:
            err.write(f"arbolcausal: error: entrada no legible como UTF-8: {exc}\n")
            return EXIT_IO
        except OSError as exc:
            err.write(f"arbolcausal: error: {exc}\n")
            return EXIT_IO
        except ValueError as exc:
            logger.debug("La orden %s terminó con error de datos", func.__name__, exc_info=True)
            err.write(f"arbolcausal: error: {exc}\n")
            return EXIT_DATA

    return envoltorio


def _write_failures(failures: Dict[str, List[ParseDiagnostic]], err: TextIO) -> None:
    for case_id in sorted(failures):
        for d in failures[case_id]:
            err.write(f"{case_id}:{d}\n")


def _aligned_cases(gold: PathLike, pred: PathLike, config: RunConfig, err: TextIO) -> List[CaseAlignment]:
    """
    Carga, analiza, descompone y alinea un par de corpus.

    Las predicciones que no se pueden analizar se evalúan como vacías y se
    marcan; un gold que no se puede analizar es un error de datos.
    """
    bosques_gold, fallos_gold = parse_corpus(load_corpus(gold))
    if fallos_gold:
        _write_failures(fallos_gold, err)
        raise CorpusError("Casos gold con errores de formato", sorted(fallos_gold))
    bosques_pred, fallos_pred = parse_corpus(load_corpus(pred))
    for case_id in sorted(fallos_pred):
        case_logger(logger, case_id).warning("predicción no analizable: se evalúa como vacía")

    preds = [decompose(b) for b in bosques_pred]
    preds.extend(TripletSet((), case_id) for case_id in fallos_pred)
    casos = pair_cases(preds, [decompose(b) for b in bosques_gold])
    marcas = {case_id: (UNPARSEABLE_PREDICTION,) for case_id in fallos_pred}
    return align_corpus(
        casos,
        config.load_thesaurus(),
        config.match_config,
        config.root_only,
        config.jobs,
        marcas,
    )


@con_codigo_de_salida
def cmd_validate(
    corpus: PathLike,
    config: Optional[RunConfig] = None,
    out: Optional[TextIO] = None,
    err: Optional[TextIO] = None,
) -> int:
    """Analiza todos los casos e imprime sus diagnósticos; 0 si no hay errores."""
    config = config or RunConfig.from_settings()
    out, err = _streams(out, err)
    errores = 0
    for caso in load_corpus(corpus).cases:
        for d in validate(caso.text):
            errores += d.is_error
            if config.format == "records":
                registro = {
                    "case_id": caso.case_id,
                    "line": d.line_number,
                    "severity": d.severity.value,
                    "code": d.code.value,
                    "message": d.message,
                }
                out.write(informes.to_json_line(registro))
            else:
                out.write(f"{caso.case_id}:{d}\n")
    return EXIT_DATA if errores else EXIT_OK


@con_codigo_de_salida
def cmd_decompose(
    corpus: PathLike,
    config: Optional[RunConfig] = None,
    out: Optional[TextIO] = None,
    err: Optional[TextIO] = None,
) -> int:
    """Exporta las tripletas de cada caso en TSV (o registros JSON)."""
    config = config or RunConfig.from_settings()
    out, err = _streams(out, err)
    bosques, fallos = parse_corpus(load_corpus(corpus))
    _write_failures(fallos, err)

    if config.format == "text":
        out.write("\t".join(TRIPLET_FIELDS) + "\n")
    for bosque in bosques:
        tripletas = decompose(bosque)
        if config.root_only:
            tripletas = root_triplets(tripletas)
        for t in tripletas:
            registro = triplet_record(bosque.case_id, t)
            if config.format == "records":
                out.write(informes.to_json_line(registro))
            else:
                out.write("\t".join(informes.tsv_value(registro[k]) for k in TRIPLET_FIELDS) + "\n")
    return EXIT_DATA if fallos else EXIT_OK


@con_codigo_de_salida
def cmd_score(
    gold: PathLike,
    pred: PathLike,
    config: Optional[RunConfig] = None,
    out: Optional[TextIO] = None,
    err: Optional[TextIO] = None,
    report: Optional[PathLike] = None,
    dump_alignment: bool = False,
) -> int:
    """
    Puntúa un corpus de predicciones contra el gold.

    Imprime P/R/F1 micro y macro con la ponderación configurada y sin
    ponderar, el desglose por relación y la tabla por caso. Con ``report``
    escribe además el informe JSON completo.
    """
    config = config or RunConfig.from_settings()
    out, err = _streams(out, err)
    alineados = _aligned_cases(gold, pred, config, err)
    ponderado = aggregate(alineados, config.scheme, config.root_only)
    sin_ponderar = aggregate(alineados, UNWEIGHTED, config.root_only)

    documento = informes.score_report(
        config, ponderado, sin_ponderar, alineados if dump_alignment else None
    )
    if report is not None:
        informes.write_json(documento, Path(report))
    if config.format == "records":
        out.write(informes.to_json(documento))
    else:
        informes.write_score_text(
            config, ponderado, sin_ponderar, out, alineados if dump_alignment else None
        )
    return EXIT_OK


def _corpus_names(paths: Sequence[PathLike]) -> List[str]:
    nombres = [Path(p).stem or str(p) for p in paths]
    if len(set(nombres)) != len(nombres):
        return [str(p) for p in paths]
    return nombres


@con_codigo_de_salida
def cmd_stats(
    corpora: Sequence[PathLike],
    config: Optional[RunConfig] = None,
    out: Optional[TextIO] = None,
    err: Optional[TextIO] = None,
    plot: Optional[PathLike] = None,
) -> int:
    """Estadísticas de uno o varios corpus, en columnas paralelas."""
    config = config or RunConfig.from_settings()
    out, err = _streams(out, err)
    informes_por_corpus: Dict[str, StatsReport] = {}
    estado = EXIT_OK
    for nombre, ruta in zip(_corpus_names(corpora), corpora):
        bosques, fallos = parse_corpus(load_corpus(ruta))
        if fallos:
            _write_failures(fallos, err)
            estado = EXIT_DATA
        informes_por_corpus[nombre] = forest_stats(bosques)

    if config.format == "records":
        out.write(informes.to_json(informes.stats_report(config, informes_por_corpus)))
    else:
        informes.write_stats_text(informes_por_corpus, out)
    if plot is not None:
        from ..graficos import plot_depth_histogram

        plot_depth_histogram(informes_por_corpus, plot)
    return estado


@con_codigo_de_salida
def cmd_correlate(
    manual: PathLike,
    config: Optional[RunConfig] = None,
    out: Optional[TextIO] = None,
    err: Optional[TextIO] = None,
    corpora: Optional[Tuple[PathLike, PathLike]] = None,
    scores: Optional[PathLike] = None,
    spearman: bool = False,
) -> int:
    """
    Correlación entre el F1 ponderado por caso y las puntuaciones manuales.

    El F1 se calcula a partir de ``corpora`` (gold, predicción) o se lee de un
    informe previo de ``score`` (``scores``). Todos los casos evaluados deben
    tener puntuación manual; las puntuaciones sobrantes se ignoran.
    """
    config = config or RunConfig.from_settings()
    out, err = _streams(out, err)
    if (corpora is None) == (scores is None):
        raise ValueError("Indique un par de corpus (gold, predicción) o un informe de puntuaciones")
    humanas = read_manual_scores(manual)
    origen: Optional[Dict[str, Any]] = None
    if scores is not None:
        automaticas, origen = read_score_report(scores)
    else:
        gold, pred = corpora
        alineados = _aligned_cases(gold, pred, config, err)
        automaticas = {c.case_id: c.score(config.scheme).f1 for c in alineados}

    faltan = [case_id for case_id in automaticas if case_id not in humanas]
    if faltan:
        raise MissingManualScoreError(faltan)
    sobrantes = sorted(set(humanas) - set(automaticas))
    if sobrantes:
        logger.warning("Puntuaciones manuales sin caso evaluado (se ignoran): %s", ", ".join(sobrantes))

    ids = sorted(automaticas)
    a = [automaticas[i] for i in ids]
    m = [humanas[i] for i in ids]
    nombres = ["pearson", "spearman"] if spearman else ["pearson"]
    coeficientes = {n: CORRELATIONS[n](a, m) for n in nombres}
    documento = informes.correlation_report(config, a, m, coeficientes, source_config=origen)

    if config.format == "records":
        out.write(informes.to_json(documento))
    else:
        informes.write_config_line(config, out)
        if origen is not None:
            out.write("# source_config " + " ".join(f"{k}={origen[k]}" for k in sorted(origen)) + "\n")
        for clave in ("cases", "mean_automatic", "mean_manual"):
            valor = documento[clave]
            out.write(f"{clave}\t{valor:.6f}\n" if isinstance(valor, float) else f"{clave}\t{valor}\n")
        for nombre, valor in coeficientes.items():
            out.write(f"{nombre}\t{valor:.6f}\n")
    return EXIT_OK


@con_codigo_de_salida
def cmd_sweep(
    gold: PathLike,
    pred: PathLike,
    manual: PathLike,
    config: Optional[RunConfig] = None,
    out: Optional[TextIO] = None,
    err: Optional[TextIO] = None,
    methods: Sequence[Union[WeightMethod, str]] = DEFAULT_METHODS,
    cs: Sequence[float] = DEFAULT_C_GRID,
    spearman: bool = False,
    plot: Optional[PathLike] = None,
) -> int:
    """Tabla (método, C, correlación) ordenada de mayor a menor correlación."""
    config = config or RunConfig.from_settings()
    out, err = _streams(out, err)
    humanas = read_manual_scores(manual)
    alineados = _aligned_cases(gold, pred, config, err)
    tabla = sweep_aligned(alineados, humanas, methods, cs, "spearman" if spearman else "pearson")

    if config.format == "records":
        out.write(informes.to_json(informes.sweep_report(config, tabla)))
    else:
        informes.write_config_line(config, out)
        informes.write_sweep_text(tabla, out)
    if plot is not None:
        from ..graficos import plot_sweep

        plot_sweep(tabla, plot)
    return EXIT_OK
