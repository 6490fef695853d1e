import pickle

import pytest

from arbolcausal.formato import Entity, RelationType, load_forest
from arbolcausal.tripletas import ROOT, RootToken, Triplet, TripletSet, decompose, root_triplets

EJEMPLO = (
    "急性心筋梗塞\n"
    "  胸痛\n"
    "  完全閉塞 @ 冠動脈\n"
    "  心エコー = 僧帽弁逆流\n"
    "    SpO2 / 低値\n"
    "    泡沫状 ＊ 痰"
)


def _tuplas(ts):
    return [(str(t.head), t.relation.value, str(t.tail), t.depth) for t in ts]


class TestTriplet:
    """Tests for triplet invariants."""

    def test_root_triplet(self):
        t = Triplet(ROOT, RelationType.PARENT_OF, Entity("A"), 0)
        assert t.is_root
        assert str(t.head) == "[root]"

    def test_depth_zero_only_for_root(self):
        with pytest.raises(ValueError):
            Triplet(Entity("A"), RelationType.PARENT_OF, Entity("B"), 0)
        with pytest.raises(ValueError):
            Triplet(ROOT, RelationType.PARENT_OF, Entity("B"), 1)

    def test_negative_depth(self):
        with pytest.raises(ValueError):
            Triplet(Entity("A"), RelationType.LOCATED, Entity("B"), -1)

    def test_root_only_heads_parent_of(self):
        with pytest.raises(ValueError):
            Triplet(ROOT, RelationType.LOCATED, Entity("B"), 0)

    def test_root_token_survives_pickling(self):
        copia = pickle.loads(pickle.dumps(Triplet(ROOT, RelationType.PARENT_OF, Entity("A"), 0)))
        assert isinstance(copia.head, RootToken)
        assert copia.is_root
        assert copia.head == ROOT


class TestDecompose:
    """Tests for forest decomposition."""

    def test_reference_example(self):
        ts = decompose(load_forest(EJEMPLO, case_id="c1"))
        assert ts.case_id == "c1"
        assert _tuplas(ts) == [
            ("[root]", "parent_of", "急性心筋梗塞", 0),
            ("急性心筋梗塞", "parent_of", "胸痛", 1),
            ("急性心筋梗塞", "parent_of", "完全閉塞", 1),
            ("完全閉塞", "located", "冠動脈", 2),
            ("急性心筋梗塞", "parent_of", "僧帽弁逆流", 1),
            ("僧帽弁逆流", "tested", "心エコー", 2),
            ("僧帽弁逆流", "parent_of", "SpO2", 2),
            ("SpO2", "polarity", "低値", 3),
            ("僧帽弁逆流", "parent_of", "痰", 2),
            ("痰", "featured", "泡沫状", 3),
        ]

    def test_single_node(self):
        assert _tuplas(decompose(load_forest("X"))) == [("[root]", "parent_of", "X", 0)]

    def test_two_roots(self):
        assert _tuplas(decompose(load_forest("A\nB"))) == [
            ("[root]", "parent_of", "A", 0),
            ("[root]", "parent_of", "B", 0),
        ]

    def test_nested_modifier_uses_value_as_head_at_node_depth(self):
        ts = decompose(load_forest("脳梗塞\n  MRI = DWI高信号 @ 右 ＊ 大脳半球"))
        assert _tuplas(ts) == [
            ("[root]", "parent_of", "脳梗塞", 0),
            ("脳梗塞", "parent_of", "DWI高信号", 1),
            ("DWI高信号", "tested", "MRI", 2),
            ("DWI高信号", "located", "大脳半球", 2),
            ("大脳半球", "featured", "右", 2),
        ]

    def test_history_flags(self):
        ts = decompose(load_forest("肝硬変\n  H:アルコール性肝線維症\n    H:ステロイド / 有効"))
        por_cola = {str(t.tail): t for t in ts}
        assert por_cola["アルコール性肝線維症"].tail_history
        assert not por_cola["アルコール性肝線維症"].head_history
        assert por_cola["ステロイド"].head_history and por_cola["ステロイド"].tail_history
        assert por_cola["有効"].head_history
        assert not por_cola["有効"].tail_history
        assert not por_cola["肝硬変"].tail_history

    def test_source_node_indices(self):
        ts = decompose(load_forest(EJEMPLO))
        assert [t.source_node for t in ts] == [0, 1, 2, 2, 3, 3, 4, 4, 5, 5]

    def test_counts_match_structure(self):
        bosque = load_forest(EJEMPLO)
        modificadores = sum(
            len(n.modifiers) + sum(len(m.nested) for m in n.modifiers) for _, n in bosque.iter_nodes()
        )
        ts = decompose(bosque)
        assert len(ts) == bosque.count_nodes() + modificadores
        assert sum(t.relation is RelationType.PARENT_OF for t in ts) == bosque.count_nodes()

    def test_deep_chain_does_not_recurse(self):
        texto = "\n".join("  " * i + f"n{i}" for i in range(3000))
        ts = decompose(load_forest(texto))
        assert [t.depth for t in ts][:4] == [0, 1, 2, 3]
        assert ts[-1].depth == 2999


class TestRootTriplets:
    """Tests for the root-only filter."""

    def test_reference_example(self):
        ts = root_triplets(decompose(load_forest(EJEMPLO, case_id="c1")))
        assert _tuplas(ts) == [("[root]", "parent_of", "急性心筋梗塞", 0)]
        assert ts.case_id == "c1"

    def test_two_roots(self):
        assert len(root_triplets(decompose(load_forest("A\n  C\nB")))) == 2

    def test_order_preserved(self):
        ts = root_triplets(decompose(load_forest("B\n  x\nA")))
        assert [str(t.tail) for t in ts] == ["B", "A"]

    def test_empty_set(self):
        assert len(root_triplets(TripletSet(()))) == 0
