import time

import numpy as np
import pytest

from arbolcausal.formato import load_forest
from arbolcausal.metricas import (
    UNWEIGHTED,
    WeightMethod,
    WeightScheme,
    aggregate,
    align_corpus,
    score_corpus,
    sweep_aligned,
)
from arbolcausal.tripletas import decompose

HALLAZGOS = ["胸痛", "発熱", "咳嗽", "呼吸困難", "浮腫", "動悸", "頭痛", "嘔吐", "下痢", "倦怠感", "喀痰", "失神"]
LUGARES = ["左胸部", "右胸部", "下腿", "頸部", "前胸部", "心窩部"]
PRUEBAS = ["心電図", "胸部X線", "血液検査", "心エコー", "CT"]
VALORES = ["ST上昇", "浸潤影", "高値", "低値", "陰性", "陽性"]


def _caso(rng: np.random.Generator) -> str:
    """Árbol de unas 30 tripletas: raíz, hallazgos con modificadores y algún nieto."""
    lineas = [rng.choice(["急性心筋梗塞", "肺炎", "心不全", "気胸"])]
    for hallazgo in rng.choice(HALLAZGOS, size=7, replace=False):
        linea = f"  {hallazgo} @ {rng.choice(LUGARES)}"
        if rng.random() < 0.5:
            linea = f"  {rng.choice(PRUEBAS)} = {hallazgo} / {rng.choice(VALORES)}"
        lineas.append(linea)
        if rng.random() < 0.4:
            lineas.append(f"    H:{rng.choice(VALORES)}{rng.integers(10)} ＊ {rng.choice(HALLAZGOS)}")
    return "\n".join(lineas)


def _perturbar(texto: str, rng: np.random.Generator) -> str:
    lineas = texto.split("\n")
    resultado = [lineas[0]]
    for linea in lineas[1:]:
        if rng.random() < 0.2 and not linea.startswith("    "):
            continue
        if rng.random() < 0.15:
            linea = linea.replace("@", "/", 1) if "@" in linea else linea + " @ 不明"
        resultado.append(linea)
    # los nietos cuyo padre se eliminó se quedan colgando del hallazgo anterior o de la raíz
    if len(resultado) > 1 and resultado[1].startswith("    "):
        resultado[1] = resultado[1][2:]
    return "\n".join(resultado)


@pytest.fixture(scope="module")
def corpus():
    rng = np.random.default_rng(20240601)
    casos = []
    for i in range(1000):
        texto = _caso(rng)
        case_id = f"caso{i:04d}"
        gold = decompose(load_forest(texto, case_id=case_id))
        pred = decompose(load_forest(_perturbar(texto, rng), case_id=case_id))
        casos.append((pred, gold))
    return casos


class TestCorpusScale:
    """Comprehensive tests on a synthetic corpus of 1000 cases."""

    def test_cases_have_about_thirty_triplets(self, corpus):
        tamanos = [len(gold) for _, gold in corpus]
        assert 15 <= float(np.mean(tamanos)) <= 45

    def test_scoring_throughput(self, corpus):
        inicio = time.perf_counter()
        total = score_corpus(corpus)
        transcurrido = time.perf_counter() - inicio
        assert len(total.per_case) == 1000
        assert transcurrido < 10.0

    def test_parallel_alignment_is_identical(self, corpus):
        serie = align_corpus(corpus[:200])
        paralelo = align_corpus(corpus[:200], max_workers=4)
        assert [c.alignment for c in serie] == [c.alignment for c in paralelo]
        for esquema in (UNWEIGHTED, WeightScheme()):
            assert aggregate(serie, esquema).model_dump_json() == aggregate(paralelo, esquema).model_dump_json()

    def test_weighted_and_unweighted_differ_but_agree_on_perfect_cases(self, corpus):
        alineados = align_corpus(corpus[:100])
        ponderado = aggregate(alineados, WeightScheme())
        sin_ponderar = aggregate(alineados, UNWEIGHTED)
        assert ponderado.micro.f1 != sin_ponderar.micro.f1
        for a, b in zip(ponderado.per_case, sin_ponderar.per_case):
            if b.f1 == 1.0:
                assert a.f1 == pytest.approx(1.0)

    def test_sweep_on_synthetic_scores(self, corpus):
        alineados = align_corpus(corpus[:300])
        # evaluador ficticio que mira sobre todo las capas superiores
        manual = {c.case_id: 100 * c.score(WeightScheme(method="exponential", c=4.0)).f1 for c in alineados}
        tabla = sweep_aligned(alineados, manual)
        assert len(tabla.cells) == 11
        assert tabla.best.method is not WeightMethod.NONE
        assert tabla.best.correlation > tabla.baseline.correlation
