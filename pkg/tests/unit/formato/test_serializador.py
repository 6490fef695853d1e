import pytest
from pydantic import ValidationError

from arbolcausal.formato import (
    CausalForest,
    Entity,
    Modifier,
    Node,
    RelationType,
    SerializeOptions,
    load_forest,
    parse_forest,
    parse_node_line,
    serialize_forest,
    serialize_node_line,
)

EJEMPLO = (
    "急性心筋梗塞\n"
    "  胸痛\n"
    "  完全閉塞 @ 冠動脈\n"
    "  心エコー = 僧帽弁逆流\n"
    "    SpO2 / 低値\n"
    "    泡沫状 ＊ 痰"
)


class TestSerializeNodeLine:
    """Tests for canonical single-line output."""

    def test_history_without_space(self):
        assert serialize_node_line(Node(Entity("アルコール性肝線維症"), True)) == "H:アルコール性肝線維症"

    def test_canonical_spacing(self):
        assert serialize_node_line(parse_node_line("MRI=DWI高信号@右*大脳半球")) == "MRI = DWI高信号 @ 右 ＊ 大脳半球"

    def test_modifier_order_in_output(self):
        nodo = Node(
            Entity("結節"),
            True,
            (
                Modifier(RelationType.POLARITY, Entity("増大")),
                Modifier(RelationType.FEATURED, Entity("多発")),
                Modifier(RelationType.TESTED, Entity("CT"), (Modifier(RelationType.FEATURED, Entity("造影")),)),
                Modifier(RelationType.LOCATED, Entity("肺")),
            ),
        )
        assert serialize_node_line(nodo) == "H:造影 ＊ CT = 多発 ＊ 結節 / 増大 @ 肺"


class TestSerializeForest:
    """Tests for document output."""

    def test_two_node_tree(self):
        bosque = CausalForest((Node(Entity("急性心筋梗塞"), children=(Node(Entity("胸痛")),)),))
        assert serialize_forest(bosque) == "急性心筋梗塞\n  胸痛"

    def test_canonical_document_is_a_fixed_point(self):
        assert serialize_forest(load_forest(EJEMPLO)) == EJEMPLO

    def test_round_trip(self):
        bosque = load_forest(EJEMPLO)
        assert parse_forest(serialize_forest(bosque)) == bosque

    def test_idempotent_on_non_canonical_input(self):
        texto = "A\n\tB@C\n\t\tD*E\nF/G"
        una = serialize_forest(load_forest(texto))
        assert una == "A\n  B @ C\n    D ＊ E\nF / G"
        assert serialize_forest(load_forest(una)) == una

    def test_tab_indent_and_trailing_newline(self):
        opciones = SerializeOptions(indent="\t", trailing_newline=True)
        texto = serialize_forest(load_forest("A\n  B\n    C"), opciones)
        assert texto == "A\n\tB\n\t\tC\n"
        assert load_forest(texto) == load_forest("A\n  B\n    C")

    @pytest.mark.parametrize("indent", ["", "x", " \t"])
    def test_invalid_indent(self, indent):
        with pytest.raises(ValidationError):
            SerializeOptions(indent=indent)
