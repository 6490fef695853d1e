from pathlib import Path
from typing import Mapping, Optional, Union

import matplotlib.pyplot as plt
import numpy as np

from ..metricas.barrido import SweepTable
from ..metricas.ponderacion import WeightMethod
from ..tripletas.estadisticas import StatsReport


def configurar_estilo_grafico():
    """
    Configura el estilo visual común para todos los gráficos de la herramienta.

    Notes
    -----
    Esta función modifica los parámetros globales de matplotlib (rcParams).
    Los cambios afectan a todos los gráficos creados después de la llamada.
    """
    plt.style.use("seaborn-v0_8-darkgrid")
    plt.rcParams["figure.figsize"] = [10, 6]
    plt.rcParams["figure.dpi"] = 100
    plt.rcParams["lines.linewidth"] = 2
    plt.rcParams["axes.grid"] = True
    plt.rcParams["grid.linestyle"] = "--"
    plt.rcParams["grid.alpha"] = 0.7
    plt.rcParams["font.size"] = 10
    plt.rcParams["axes.titlesize"] = 11
    plt.rcParams["axes.labelsize"] = 10
    plt.rcParams["legend.fontsize"] = 9


def _mostrar_o_guardar(fig, ruta: Optional[Union[str, Path]]) -> None:
    plt.tight_layout()
    if ruta is None:
        plt.show()
    else:
        fig.savefig(ruta)
        plt.close(fig)


def plot_sweep(table: SweepTable, ruta: Optional[Union[str, Path]] = None):
    """
    Dibuja la correlación frente a C para cada método de ponderación.

    La celda sin ponderar se dibuja como una línea horizontal de referencia.

    Parameters
    ----------
    table : SweepTable
        Resultado de :func:`arbolcausal.metricas.sweep`.
    ruta : str or Path, optional
        Si se indica, la figura se guarda en ese archivo en lugar de mostrarse.

    Raises
    ------
    ValueError
        Si la tabla no tiene ninguna celda ponderada con correlación definida.
    """
    configurar_estilo_grafico()
    fig, ax = plt.subplots(figsize=(8, 5))

    dibujadas = 0
    for metodo in (WeightMethod.RECIPROCAL, WeightMethod.EXPONENTIAL):
        celdas = sorted(
            (c for c in table.cells if c.method is metodo and c.correlation is not None),
            key=lambda c: c.c,
        )
        if not celdas:
            continue
        cs = np.array([c.c for c in celdas])
        valores = np.array([c.correlation for c in celdas])
        ax.plot(cs, valores, marker="o", label=metodo.value)
        dibujadas += 1
    if not dibujadas:
        plt.close(fig)
        raise ValueError("No hay celdas ponderadas con correlación definida para dibujar.")

    base = table.baseline.correlation
    if base is not None:
        ax.axhline(base, color="gray", linestyle=":", label="sin ponderar")

    ax.set_xscale("log", base=2)
    ax.set_xlabel("C")
    ax.set_ylabel(f"Correlación ({table.correlation})")
    ax.set_title(f"Correlación con la evaluación manual ({table.cases} casos)")
    ax.legend(loc="best")
    _mostrar_o_guardar(fig, ruta)
    return fig


def plot_depth_histogram(reports: Mapping[str, StatsReport], ruta: Optional[Union[str, Path]] = None):
    """
    Histograma de profundidades de tripletas, una serie de barras por corpus.

    Parameters
    ----------
    reports : mapping of str to StatsReport
        Informes por nombre de corpus (p. ej. gold y cada sistema).
    ruta : str or Path, optional
        Archivo de salida; si es None se muestra la figura.
    """
    if not reports:
        raise ValueError("Se necesita al menos un informe para el histograma.")
    configurar_estilo_grafico()
    fig, ax = plt.subplots(figsize=(8, 5))

    profundidades = sorted({d for r in reports.values() for d in r.depth_histogram})
    x = np.arange(len(profundidades))
    ancho = 0.8 / len(reports)
    for i, (nombre, informe) in enumerate(reports.items()):
        alturas = [informe.depth_histogram.get(d, 0) for d in profundidades]
        ax.bar(x + i * ancho, alturas, width=ancho, label=nombre)

    ax.set_xticks(x + ancho * (len(reports) - 1) / 2)
    ax.set_xticklabels([str(d) for d in profundidades])
    ax.set_xlabel("Profundidad de la tripleta")
    ax.set_ylabel("Número de tripletas")
    ax.set_title("Distribución de profundidades")
    ax.legend(loc="upper right")
    _mostrar_o_guardar(fig, ruta)
    return fig
