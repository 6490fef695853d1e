"""
Ejemplo de barrido de esquemas de ponderación.

Construye un pequeño corpus sintético con puntuaciones manuales que castigan
los errores cerca de la raíz, busca el método y la C que mejor correlacionan y
guarda la curva correlación-C en ``barrido.png``.
"""

from arbolcausal.formato import load_forest
from arbolcausal.graficos import plot_sweep
from arbolcausal.metricas import sweep
from arbolcausal.tripletas import decompose

GOLD = """急性心筋梗塞
  胸痛 @ 前胸部
  冠動脈造影 = 完全閉塞
    左 ＊ 前下行枝
  心電図 = ST上昇
    II誘導
    aVF誘導"""

# (predicción, puntuación manual 0-100)
CASOS = {
    "c1": (GOLD, 100),
    "c2": (GOLD.replace("    aVF誘導", "    V1誘導"), 92),
    "c3": (GOLD.replace("急性心筋梗塞", "肺塞栓症"), 35),
    "c4": (GOLD.replace("  胸痛 @ 前胸部\n", ""), 60),
    "c5": (GOLD.replace("    II誘導\n", ""), 95),
    "c6": (GOLD.replace("冠動脈造影 = 完全閉塞", "冠動脈造影 = 狭窄"), 70),
}


def main():
    casos = []
    manual = {}
    for case_id, (texto, puntuacion) in CASOS.items():
        pred = decompose(load_forest(texto, case_id=case_id))
        gold = decompose(load_forest(GOLD, case_id=case_id))
        casos.append((pred, gold))
        manual[case_id] = puntuacion

    tabla = sweep(casos, manual)
    print(f"{'método':<14}{'C':>6}{'pearson':>10}")
    for celda in tabla.cells:
        c = "-" if celda.c is None else f"{celda.c:g}"
        valor = "indefinida" if celda.correlation is None else f"{celda.correlation:.3f}"
        print(f"{celda.method.value:<14}{c:>6}{valor:>10}")
    print(f"\nMejor: {tabla.best.method.value} C={tabla.best.c}")

    plot_sweep(tabla, "barrido.png")
    print("Gráfico guardado en barrido.png")


if __name__ == "__main__":
    main()
