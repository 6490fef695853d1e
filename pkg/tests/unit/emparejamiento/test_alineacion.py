import math

import pytest

from arbolcausal.emparejamiento import (
    AlignedPair,
    Alignment,
    MatchConfig,
    Thesaurus,
    align,
    triplet_match,
)
from arbolcausal.errores import ContractError
from arbolcausal.formato import Entity, RelationType, load_forest
from arbolcausal.tripletas import ROOT, Triplet, TripletSet, decompose


def _t(head, rel, tail, depth=1, hh=False, th=False):
    cabeza = ROOT if head is None else Entity(head)
    return Triplet(cabeza, RelationType(rel), Entity(tail), depth, hh, th)


class TestTripletMatch:
    """Tests for single triplet comparison."""

    def test_exact(self):
        assert triplet_match(_t("A", "located", "B"), _t("A", "located", "B")) == (True, 0.0)

    def test_depth_is_ignored(self):
        assert triplet_match(_t("A", "located", "B", 1), _t("A", "located", "B", 4)).matched

    def test_fuzzy_cost_is_sum_of_ratios(self):
        resultado = triplet_match(_t("僧帽弁の逆流", "parent_of", "SpO2"), _t("僧帽弁逆流", "parent_of", "SpO2"))
        assert resultado.matched
        assert resultado.cost == pytest.approx(0.2)

    def test_relation_must_match(self):
        resultado = triplet_match(_t("A", "located", "B"), _t("A", "featured", "B"))
        assert not resultado.matched
        assert math.isinf(resultado.cost)

    def test_history_flags_must_match(self):
        assert not triplet_match(_t("A", "parent_of", "B", th=True), _t("A", "parent_of", "B")).matched
        assert not triplet_match(_t("A", "polarity", "B", hh=True), _t("A", "polarity", "B")).matched

    def test_polarity_tail_exact(self):
        assert not triplet_match(_t("SpO2", "polarity", "低値です"), _t("SpO2", "polarity", "低値でず")).matched
        assert triplet_match(_t("SpO2", "located", "低値です"), _t("SpO2", "located", "低値でず")).matched

    def test_root_head(self):
        assert triplet_match(_t(None, "parent_of", "A", 0), _t(None, "parent_of", "A", 0)).matched
        assert not triplet_match(_t(None, "parent_of", "A", 0), _t("X", "parent_of", "A", 1)).matched


class TestAlignment:
    """Tests for the alignment value object."""

    def test_partition_is_enforced(self):
        with pytest.raises(ContractError):
            Alignment((), (0,), (), pred_size=2, gold_size=0)
        with pytest.raises(ContractError):
            Alignment((AlignedPair(0, 0, 0.0),), (0,), (), pred_size=1, gold_size=1)

    def test_valid(self):
        a = Alignment((AlignedPair(1, 0, 0.0),), (0,), (1,), pred_size=2, gold_size=2)
        assert a.matched_count == 1


class TestAlign:
    """Tests for greedy one-to-one alignment."""

    def test_identical_sets(self):
        ts = decompose(load_forest("急性心筋梗塞\n  完全閉塞 @ 冠動脈\n  SpO2 / 低値"))
        a = align(ts, ts)
        assert a.matched_count == len(ts)
        assert a.unmatched_pred == () and a.unmatched_gold == ()
        assert all(p.pred_index == p.gold_index for p in a.pairs)

    def test_duplicates_match_one_to_one(self):
        pred = TripletSet((_t("A", "located", "B"), _t("A", "located", "B")))
        gold = TripletSet((_t("A", "located", "B"),))
        a = align(pred, gold)
        assert a.matched_count == 1
        assert a.pairs[0].pred_index == 0
        assert a.unmatched_pred == (1,)

    def test_lower_cost_wins(self):
        gold = TripletSet((_t("X", "located", "abcd"), _t("X", "located", "abce")))
        pred = TripletSet((_t("X", "located", "abce"), _t("X", "located", "abcd")))
        a = align(pred, gold)
        assert sorted((p.pred_index, p.gold_index) for p in a.pairs) == [(0, 1), (1, 0)]
        assert all(p.cost == 0.0 for p in a.pairs)

    def test_ties_broken_by_index(self):
        pred = TripletSet((_t("X", "located", "abcd"),))
        gold = TripletSet((_t("X", "located", "abcx"), _t("X", "located", "abcy")))
        a = align(pred, gold)
        assert a.pairs == (AlignedPair(0, 0, 0.25),)

    def test_empty_sides(self):
        ts = decompose(load_forest("A"))
        vacio = TripletSet(())
        assert align(vacio, ts).unmatched_gold == (0,)
        assert align(ts, vacio).unmatched_pred == (0,)
        assert align(vacio, vacio).matched_count == 0

    def test_thesaurus_and_config_are_used(self):
        pred = TripletSet((_t("AMI", "parent_of", "胸痛"),))
        gold = TripletSet((_t("急性心筋梗塞", "parent_of", "胸痛"),))
        assert align(pred, gold).matched_count == 0
        assert align(pred, gold, Thesaurus({"AMI": "急性心筋梗塞"})).matched_count == 1
        casi = TripletSet((_t("低", "located", "B"),))
        exacta = TripletSet((_t("低値", "located", "B"),))
        assert align(casi, exacta).matched_count == 0
        assert align(casi, exacta, cfg=MatchConfig(strict_threshold=False)).matched_count == 1

    def test_agrees_with_pairwise_triplet_match(self):
        pred = decompose(load_forest("心筋梗塞\n  胸の痛み\n  完全閉塞 @ 冠動脈\n  SpO2 / 低"))
        gold = decompose(load_forest("急性心筋梗塞\n  胸痛\n  完全閉塞 @ 左冠動脈\n  SpO2 / 低値"))
        a = align(pred, gold)
        for p in a.pairs:
            resultado = triplet_match(pred[p.pred_index], gold[p.gold_index])
            assert resultado.matched
            assert resultado.cost == pytest.approx(p.cost)
        emparejados = {(p.pred_index, p.gold_index) for p in a.pairs}
        for pi in a.unmatched_pred:
            for gi in a.unmatched_gold:
                assert not triplet_match(pred[pi], gold[gi]).matched
        assert (0, 0) in emparejados
