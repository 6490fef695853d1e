"""Property-based tests for weighted scoring and correlation."""

import itertools
import math

import pytest
from hypothesis import HealthCheck, assume, given, settings, strategies as st

from arbolcausal.emparejamiento import align
from arbolcausal.formato import CausalForest, Entity, Node, RelationType
from arbolcausal.metricas import UNWEIGHTED, WeightMethod, WeightScheme, pearson, score_case
from arbolcausal.tripletas import TripletSet, decompose

from .estrategias import bosques, formas

PONDERADOS = [WeightScheme(method=WeightMethod.RECIPROCAL, c=2.0), WeightScheme(method=WeightMethod.EXPONENTIAL, c=2.0)]

# raíz -> a -> b -> c: garantiza tripletas parent_of de profundidad 1 y 3
CADENA = (((),),)


def _nodo(forma, contador) -> Node:
    # Un carácter CJK distinto por nodo: ningún par de nombres coincide de forma aproximada.
    nombre = Entity(chr(0x4E00 + next(contador)))
    return Node(nombre, children=tuple(_nodo(hijo, contador) for hijo in forma))


@st.composite
def bosques_con_nombres_unicos(draw):
    contador = itertools.count()
    extras = tuple(draw(st.lists(formas(), max_size=3)))
    otras_raices = draw(st.lists(formas(), max_size=2))
    raices = [_nodo((CADENA,) + extras, contador)] + [_nodo(f, contador) for f in otras_raices]
    return CausalForest(tuple(raices))


def _f1_sin(gold: TripletSet, indice: int, esquema: WeightScheme) -> float:
    pred = TripletSet(tuple(t for i, t in enumerate(gold) if i != indice))
    return score_case(pred, gold, align(pred, gold), esquema).f1


class TestWeightedScoringProperties:
    """Properties of depth-weighted P/R/F1."""

    @given(bosque=bosques_con_nombres_unicos(), data=st.data())
    @settings(max_examples=100, deadline=None, suppress_health_check=[HealthCheck.too_slow])
    def test_shallow_errors_cost_more(self, bosque, data):
        """Property: losing a depth-1 parent_of hurts more than losing a depth-3 one."""
        gold = decompose(bosque)
        candidatos = {
            d: [i for i, t in enumerate(gold) if t.relation is RelationType.PARENT_OF and t.depth == d]
            for d in (1, 3)
        }
        somero = data.draw(st.sampled_from(candidatos[1]))
        profundo = data.draw(st.sampled_from(candidatos[3]))
        for esquema in PONDERADOS:
            assert _f1_sin(gold, somero, esquema) < _f1_sin(gold, profundo, esquema)
        assert _f1_sin(gold, somero, UNWEIGHTED) == pytest.approx(_f1_sin(gold, profundo, UNWEIGHTED))

    @given(bosque=bosques)
    @settings(max_examples=100, deadline=None, suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large])
    def test_perfect_prediction_scores_one(self, bosque):
        ts = decompose(bosque)
        for esquema in PONDERADOS + [UNWEIGHTED, WeightScheme(method="exponential", c=0.5)]:
            s = score_case(ts, ts, align(ts, ts), esquema)
            assert s.f1 == pytest.approx(1.0)

    @given(pred=bosques, gold=bosques, c=st.sampled_from([0.5, 1.0, 2.0, 4.0, 8.0]))
    @settings(max_examples=100, deadline=None, suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large])
    def test_scores_are_bounded(self, pred, gold, c):
        p, g = decompose(pred), decompose(gold)
        alineamiento = align(p, g)
        for metodo in WeightMethod:
            s = score_case(p, g, alineamiento, WeightScheme(method=metodo, c=c))
            for valor in (s.precision, s.recall, s.f1):
                assert 0.0 <= valor <= 1.0 + 1e-12
            assert min(s.precision, s.recall) - 1e-12 <= s.f1 <= max(s.precision, s.recall) + 1e-12


def pearson_fuerza_bruta(xs, ys):
    n = len(xs)
    mx, my = sum(xs) / n, sum(ys) / n
    cov = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    sx = math.sqrt(sum((x - mx) ** 2 for x in xs))
    sy = math.sqrt(sum((y - my) ** 2 for y in ys))
    return cov / (sx * sy)


class TestCorrelationProperties:
    @given(
        pares=st.lists(
            st.tuples(st.integers(min_value=-1000, max_value=1000), st.integers(min_value=0, max_value=100)),
            min_size=2,
            max_size=40,
        )
    )
    @settings(max_examples=100, deadline=None)
    def test_pearson_matches_brute_force(self, pares):
        xs, ys = [p[0] for p in pares], [p[1] for p in pares]
        assume(len(set(xs)) > 1 and len(set(ys)) > 1)
        assert pearson(xs, ys) == pytest.approx(pearson_fuerza_bruta(xs, ys), abs=1e-9)

    @given(
        xs=st.lists(st.floats(min_value=0, max_value=1, allow_nan=False), min_size=3, max_size=20),
        escala=st.floats(min_value=0.1, max_value=100),
    )
    @settings(max_examples=100, deadline=None)
    def test_pearson_invariant_to_positive_scaling(self, xs, escala):
        assume(max(xs) - min(xs) > 1e-3)
        ys = [x * escala + 5 for x in xs]
        assume(max(ys) - min(ys) > 1e-3)
        assert pearson(xs, ys) == pytest.approx(1.0, abs=1e-9)
