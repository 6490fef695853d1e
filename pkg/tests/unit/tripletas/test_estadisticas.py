from arbolcausal.formato import load_forest
from arbolcausal.tripletas import StatsReport, forest_stats

EJEMPLO = (
    "急性心筋梗塞\n"
    "  胸痛\n"
    "  完全閉塞 @ 冠動脈\n"
    "  心エコー = 僧帽弁逆流\n"
    "    SpO2 / 低値\n"
    "    泡沫状 ＊ 痰"
)


class TestForestStats:
    """Tests for corpus statistics."""

    def test_reference_example(self):
        informe = forest_stats([load_forest(EJEMPLO)])
        assert informe.cases == 1
        assert informe.triplets == 10
        assert informe.roots == 1
        assert informe.nodes == 6
        assert informe.triplets_without_root == 9
        assert informe.per_relation == {
            "parent_of": 6,
            "located": 1,
            "polarity": 1,
            "tested": 1,
            "featured": 1,
        }
        assert informe.depth_histogram == {0: 1, 1: 3, 2: 4, 3: 2}
        assert informe.max_depth == 3

    def test_empty_corpus(self):
        informe = forest_stats([])
        assert informe == StatsReport()
        assert informe.triplets == 0 and informe.roots == 0
        assert set(informe.per_relation.values()) == {0}
        assert informe.mean_triplets_per_case == 0.0
        assert informe.mean_roots_per_case == 0.0

    def test_multiple_cases(self):
        corpus = [load_forest("A\nB"), load_forest("H:C\n  D @ E")]
        informe = forest_stats(corpus)
        assert informe.cases == 2
        assert informe.roots == 3
        assert informe.history_nodes == 1
        assert informe.triplets == 5
        assert informe.mean_roots_per_case == 1.5
        assert informe.mean_triplets_per_case == 2.5

    def test_accepts_generators(self):
        informe = forest_stats(load_forest(t) for t in ["A", "B"])
        assert informe.cases == 2
