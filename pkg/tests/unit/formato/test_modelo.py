import pytest

from arbolcausal.formato import CausalForest, Entity, Modifier, Node, RelationType


class TestEntity:
    """Tests for entity surface validation."""

    def test_valid_surfaces(self):
        assert Entity("急性心筋梗塞").surface == "急性心筋梗塞"
        assert Entity("SpO2").surface == "SpO2"
        assert str(Entity("胸痛")) == "胸痛"

    @pytest.mark.parametrize(
        "surface",
        ["", "   ", " 胸痛", "胸痛 ", "A@B", "A/B", "A=B", "A＊B", "A*B", "H:胸痛", "胸\n痛", "胸\r痛", "胸\t痛"],
    )
    def test_invalid_surfaces(self, surface):
        with pytest.raises(ValueError):
            Entity(surface)

    def test_history_marker_inside_surface_is_allowed(self):
        assert Entity("既往H:歴").surface == "既往H:歴"


class TestModifier:
    """Tests for modifier construction."""

    def test_relation_coerced_from_string(self):
        m = Modifier("located", Entity("冠動脈"))
        assert m.relation is RelationType.LOCATED

    def test_parent_of_is_not_a_modifier(self):
        with pytest.raises(ValueError):
            Modifier(RelationType.PARENT_OF, Entity("X"))

    def test_located_accepts_featured_nested(self):
        m = Modifier(RelationType.LOCATED, Entity("大脳半球"), (Modifier(RelationType.FEATURED, Entity("右")),))
        assert m.nested[0].value == Entity("右")

    def test_polarity_rejects_nested(self):
        with pytest.raises(ValueError):
            Modifier(RelationType.POLARITY, Entity("低値"), (Modifier(RelationType.FEATURED, Entity("著明")),))

    def test_nested_must_be_plain_featured(self):
        with pytest.raises(ValueError):
            Modifier(RelationType.LOCATED, Entity("X"), (Modifier(RelationType.LOCATED, Entity("Y")),))


class TestNode:
    """Tests for node invariants."""

    def test_modifiers_are_canonically_ordered(self):
        nodo = Node(
            Entity("DWI高信号"),
            modifiers=(
                Modifier(RelationType.LOCATED, Entity("脳")),
                Modifier(RelationType.FEATURED, Entity("多発")),
                Modifier(RelationType.TESTED, Entity("MRI")),
                Modifier(RelationType.POLARITY, Entity("陽性")),
            ),
        )
        assert [m.relation for m in nodo.modifiers] == [
            RelationType.TESTED,
            RelationType.FEATURED,
            RelationType.LOCATED,
            RelationType.POLARITY,
        ]
        assert nodo.tested.value == Entity("MRI")

    def test_at_most_one_tested(self):
        with pytest.raises(ValueError):
            Node(
                Entity("A"),
                modifiers=(
                    Modifier(RelationType.TESTED, Entity("CT")),
                    Modifier(RelationType.TESTED, Entity("MRI")),
                ),
            )

    def test_head_featured_has_no_nested(self):
        featured = Modifier.__new__(Modifier)
        object.__setattr__(featured, "relation", RelationType.FEATURED)
        object.__setattr__(featured, "value", Entity("a"))
        object.__setattr__(featured, "nested", (Modifier(RelationType.FEATURED, Entity("b")),))
        with pytest.raises(ValueError):
            Node(Entity("A"), modifiers=(featured,))

    def test_with_children_keeps_everything_else(self):
        nodo = Node(Entity("A"), True, (Modifier(RelationType.POLARITY, Entity("有効")),))
        hijo = Node(Entity("B"))
        copia = nodo.with_children((hijo,))
        assert copia.children == (hijo,)
        assert copia.history and copia.modifiers == nodo.modifiers
        assert nodo.children == ()


class TestCausalForest:
    """Tests for forests and depth-first traversal."""

    def test_requires_a_root(self):
        with pytest.raises(ValueError):
            CausalForest(())

    def test_iter_nodes_preorder_with_levels(self):
        c = Node(Entity("C"))
        b = Node(Entity("B"), children=(c,))
        d = Node(Entity("D"))
        bosque = CausalForest((Node(Entity("A"), children=(b, d)), Node(Entity("E"))), "caso-1")
        assert [(nivel, n.head.surface) for nivel, n in bosque.iter_nodes()] == [
            (0, "A"),
            (1, "B"),
            (2, "C"),
            (1, "D"),
            (0, "E"),
        ]
        assert bosque.count_nodes() == 5
        assert bosque.case_id == "caso-1"

    def test_structural_equality(self):
        uno = CausalForest((Node(Entity("A"), children=(Node(Entity("B")),)),))
        otro = CausalForest((Node(Entity("A"), children=(Node(Entity("B")),)),))
        assert uno == otro
        assert hash(uno) == hash(otro)
