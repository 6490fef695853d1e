"""
Punto de entrada ``arbolcausal``.

Uso:
    arbolcausal [-v | -q] validate CORPUS
    arbolcausal decompose CORPUS [--format records]
    arbolcausal score GOLD PRED [--root-only] [--report PATH] [--dump-alignment]
    arbolcausal stats CORPUS [CORPUS ...] [--plot PATH]
    arbolcausal correlate (GOLD PRED | --scores REPORT) --manual TSV [--spearman]
    arbolcausal sweep GOLD PRED --manual TSV [--methods ...] [--C-grid ...] [--plot PATH]
"""

import argparse
import sys
from typing import List, Optional

from pydantic import ValidationError

from .. import __version__
from ..logger import set_verbosity
from ..metricas.barrido import DEFAULT_C_GRID, DEFAULT_METHODS
from ..metricas.ponderacion import WeightMethod
from . import comandos
from .informes import RunConfig


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=["text", "records"], default=None, help="Formato de salida")


def _add_matching(parser: argparse.ArgumentParser) -> None:
    grupo = parser.add_argument_group("evaluación")
    grupo.add_argument("--threshold", type=float, default=None, help="Umbral de distancia de edición (0.5)")
    grupo.add_argument(
        "--method",
        choices=[m.value for m in WeightMethod],
        default=None,
        help="Ponderación de tripletas (reciprocal)",
    )
    grupo.add_argument("--C", dest="c", type=float, default=None, help="Constante C de la ponderación (2)")
    grupo.add_argument("--root-only", action="store_true", default=None, help="Evaluar solo las tripletas raíz")
    grupo.add_argument("--thesaurus", default=None, help="Tesauro TSV (por defecto EVALUATION__THESAURUS)")
    grupo.add_argument(
        "--no-unicode-normalize",
        dest="unicode_normalize",
        action="store_false",
        default=None,
        help="No aplicar NFKC antes del tesauro",
    )
    grupo.add_argument("--jobs", type=int, default=None, help="Procesos para el alineamiento")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arbolcausal",
        description="Evaluación de árboles causales por tripletas ponderadas",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    verbosidad = parser.add_mutually_exclusive_group()
    verbosidad.add_argument("-v", "--verbose", action="count", default=0, help="Mensajes de depuración en stderr")
    verbosidad.add_argument("-q", "--quiet", action="store_true", help="Solo errores en stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="Valida el formato de un corpus")
    p.add_argument("corpus")
    _add_common(p)

    p = sub.add_parser("decompose", help="Exporta las tripletas de un corpus")
    p.add_argument("corpus")
    p.add_argument("--root-only", action="store_true", default=None)
    _add_common(p)

    p = sub.add_parser("score", help="Puntúa predicciones contra el gold")
    p.add_argument("gold")
    p.add_argument("pred")
    p.add_argument("--report", default=None, help="Escribe el informe JSON en esta ruta")
    p.add_argument("--dump-alignment", action="store_true", help="Incluye el detalle del alineamiento")
    _add_matching(p)
    _add_common(p)

    p = sub.add_parser("stats", help="Estadísticas de uno o varios corpus")
    p.add_argument("corpora", nargs="+")
    p.add_argument("--plot", default=None, help="Guarda el histograma de profundidades")
    _add_common(p)

    p = sub.add_parser("correlate", help="Correlación con las puntuaciones manuales")
    p.add_argument("corpora", nargs="*", metavar="GOLD PRED")
    p.add_argument("--scores", default=None, help="Informe JSON previo de score")
    p.add_argument("--manual", required=True, help="TSV case_id<TAB>score (0-100)")
    p.add_argument("--spearman", action="store_true", help="Añade la correlación de Spearman")
    _add_matching(p)
    _add_common(p)

    p = sub.add_parser("sweep", help="Barrido de métodos de ponderación y valores de C")
    p.add_argument("gold")
    p.add_argument("pred")
    p.add_argument("--manual", required=True, help="TSV case_id<TAB>score (0-100)")
    p.add_argument(
        "--methods",
        nargs="+",
        choices=[m.value for m in WeightMethod],
        default=[m.value for m in DEFAULT_METHODS],
    )
    p.add_argument("--C-grid", dest="c_grid", nargs="+", type=float, default=list(DEFAULT_C_GRID))
    p.add_argument("--spearman", action="store_true", help="Usa Spearman en lugar de Pearson")
    p.add_argument("--plot", default=None, help="Guarda la curva correlación-C")
    _add_matching(p)
    _add_common(p)
    return parser


def _run_config(args: argparse.Namespace) -> RunConfig:
    return RunConfig.from_settings(
        threshold=getattr(args, "threshold", None),
        method=getattr(args, "method", None),
        c=getattr(args, "c", None),
        root_only=getattr(args, "root_only", None),
        thesaurus=getattr(args, "thesaurus", None),
        unicode_normalize=getattr(args, "unicode_normalize", None),
        jobs=getattr(args, "jobs", None),
        format=args.format,
    )


def main(argv: Optional[List[str]] = None) -> int:
    """Ejecuta la orden indicada y devuelve su código de salida."""
    parser = build_parser()
    args = parser.parse_args(argv)
    set_verbosity(args.verbose, args.quiet)
    try:
        config = _run_config(args)
    except ValidationError as exc:
        sys.stderr.write(f"arbolcausal: error: configuración inválida: {exc}\n")
        return comandos.EXIT_DATA

    if args.command == "validate":
        return comandos.cmd_validate(args.corpus, config)
    if args.command == "decompose":
        return comandos.cmd_decompose(args.corpus, config)
    if args.command == "score":
        return comandos.cmd_score(
            args.gold, args.pred, config, report=args.report, dump_alignment=args.dump_alignment
        )
    if args.command == "stats":
        return comandos.cmd_stats(args.corpora, config, plot=args.plot)
    if args.command == "correlate":
        if args.corpora and len(args.corpora) != 2:
            parser.error("correlate necesita exactamente dos corpus (GOLD PRED)")
        corpora = tuple(args.corpora) if args.corpora else None
        return comandos.cmd_correlate(
            args.manual, config, corpora=corpora, scores=args.scores, spearman=args.spearman
        )
    return comandos.cmd_sweep(
        args.gold,
        args.pred,
        args.manual,
        config,
        methods=args.methods,
        cs=args.c_grid,
        spearman=args.spearman,
        plot=args.plot,
    )


if __name__ == "__main__":
    sys.exit(main())
