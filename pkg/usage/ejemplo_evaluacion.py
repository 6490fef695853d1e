"""
Ejemplo de evaluación de un árbol causal predicho frente al gold.

Analiza dos árboles, los descompone en tripletas, muestra el alineamiento y
compara la puntuación ponderada por profundidad con la puntuación por conteo.
"""

from arbolcausal.emparejamiento import Thesaurus, align
from arbolcausal.formato import load_forest, serialize_forest
from arbolcausal.metricas import UNWEIGHTED, WeightMethod, WeightScheme, score_case
from arbolcausal.tripletas import decompose

GOLD = """
急性心筋梗塞
  胸痛 @ 前胸部
  完全閉塞 @ 左 ＊ 冠動脈
  心エコー = 僧帽弁逆流
    SpO2 / 低値
    泡沫状 ＊ 痰
"""

PRED = """
心筋梗塞
  胸痛 @ 前胸部
  閉塞 @ 冠動脈
  心エコー = 僧帽弁の逆流
    SpO2 / 高値
"""


def main():
    gold = load_forest(GOLD, case_id="caso1")
    pred = load_forest(PRED, case_id="caso1")
    print("Gold canónico:")
    print(serialize_forest(gold))
    print()

    tesauro = Thesaurus({"心筋梗塞": "急性心筋梗塞"})
    tripletas_gold = decompose(gold)
    tripletas_pred = decompose(pred)
    alineamiento = align(tripletas_pred, tripletas_gold, tesauro)

    print(f"Tripletas gold: {len(tripletas_gold)}, predichas: {len(tripletas_pred)}")
    for par in alineamiento.pairs:
        p, g = tripletas_pred[par.pred_index], tripletas_gold[par.gold_index]
        print(f"  = ({p.head}, {p.relation.value}, {p.tail}) ~ ({g.head}, {g.relation.value}, {g.tail}) coste={par.cost:.2f}")
    for i in alineamiento.unmatched_gold:
        g = tripletas_gold[i]
        print(f"  - falta ({g.head}, {g.relation.value}, {g.tail}) d{g.depth}")
    for i in alineamiento.unmatched_pred:
        p = tripletas_pred[i]
        print(f"  + sobra ({p.head}, {p.relation.value}, {p.tail}) d{p.depth}")
    print()

    esquemas = [
        UNWEIGHTED,
        WeightScheme(method=WeightMethod.RECIPROCAL, c=2.0),
        WeightScheme(method=WeightMethod.EXPONENTIAL, c=2.0),
    ]
    for esquema in esquemas:
        s = score_case(tripletas_pred, tripletas_gold, alineamiento, esquema)
        print(f"{esquema.label:<20} P={s.precision:.3f} R={s.recall:.3f} F1={s.f1:.3f}")


if __name__ == "__main__":
    main()
