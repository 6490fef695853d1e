"""
Benchmark del alineamiento y la puntuación de un corpus sintético.

Mide el tiempo de alinear 1000 casos en serie y en paralelo, y el de volver a
puntuar los casos ya alineados con cada esquema de ponderación.
"""

import sys
import timeit
from pathlib import Path

import numpy as np

# Añadir el directorio raíz al path para importar los módulos
sys.path.append(str(Path(__file__).parent.parent))

from arbolcausal.formato import load_forest  # noqa: E402
from arbolcausal.metricas import UNWEIGHTED, WeightMethod, WeightScheme, aggregate, align_corpus  # noqa: E402
from arbolcausal.tripletas import decompose  # noqa: E402

HALLAZGOS = ["胸痛", "発熱", "咳嗽", "呼吸困難", "浮腫", "動悸", "頭痛", "嘔吐", "下痢", "倦怠感"]
LUGARES = ["左胸部", "右胸部", "下腿", "頸部", "前胸部"]


def generar_corpus(n: int, semilla: int = 0):
    rng = np.random.default_rng(semilla)
    casos = []
    for i in range(n):
        lineas = ["急性心筋梗塞"]
        for hallazgo in rng.choice(HALLAZGOS, size=8, replace=False):
            lineas.append(f"  {hallazgo} @ {rng.choice(LUGARES)}")
            if rng.random() < 0.5:
                lineas.append(f"    {rng.choice(HALLAZGOS)}{rng.integers(100)} / 陽性")
        gold_texto = "\n".join(lineas)
        pred_texto = "\n".join(l for l in lineas if rng.random() > 0.15 or not l.startswith("    "))
        case_id = f"caso{i:05d}"
        casos.append(
            (
                decompose(load_forest(pred_texto, case_id=case_id)),
                decompose(load_forest(gold_texto, case_id=case_id)),
            )
        )
    return casos


def benchmark_alineamiento(casos):
    print("\n=== Benchmark: alineamiento ===")
    tripletas = sum(len(g) for _, g in casos)
    print(f"{len(casos)} casos, {tripletas} tripletas gold")

    t_serie = timeit.timeit(lambda: align_corpus(casos), number=3) / 3
    print(f"  - En serie: {t_serie * 1000:.1f} ms")

    for procesos in (2, 4):
        t_paralelo = timeit.timeit(lambda: align_corpus(casos, max_workers=procesos), number=3) / 3
        print(f"  - {procesos} procesos: {t_paralelo * 1000:.1f} ms ({t_serie / t_paralelo:.2f}x)")


def benchmark_puntuacion(casos):
    print("\n=== Benchmark: puntuación sobre casos alineados ===")
    alineados = align_corpus(casos)
    esquemas = [UNWEIGHTED] + [
        WeightScheme(method=m, c=c) for m in (WeightMethod.RECIPROCAL, WeightMethod.EXPONENTIAL) for c in (0.5, 2.0, 8.0)
    ]
    for esquema in esquemas:
        t = timeit.timeit(lambda: aggregate(alineados, esquema), number=5) / 5
        print(f"  - {esquema.label:<20} {t * 1000:.1f} ms")


if __name__ == "__main__":
    corpus = generar_corpus(1000)
    benchmark_alineamiento(corpus)
    benchmark_puntuacion(corpus)
