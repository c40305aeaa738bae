import pytest

from starforest.factor import StarFactor, assemble
from starforest.graph import Graph, GraphError


def path(n):
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


class TestStarFactor:
    def test_text_roundtrip(self):
        sf = StarFactor.from_sets({2: {0, 5}, 3: {1, 4}})
        text = sf.to_text()
        assert text == "2: 0 5\n3: 1 4\n"
        assert StarFactor.from_text(text) == sf

    def test_from_text_comments(self):
        sf = StarFactor.from_text("# note\n\n0: 1\n")
        assert sf.stars == {0: (1,)}

    def test_from_text_bad_line(self):
        with pytest.raises(GraphError, match="line 1"):
            StarFactor.from_text("0: x")

    def test_from_text_duplicate_center(self):
        with pytest.raises(GraphError, match="duplicate"):
            StarFactor.from_text("0: 1\n0: 2\n")

    def test_stats(self):
        sf = StarFactor.from_sets({0: {1}, 2: {3, 4, 5}})
        assert sf.min_star() == 1
        assert sf.max_star() == 3
        assert sf.centers() == [0, 2]


class TestAssemble:
    def test_attach_lowest_id_center(self):
        g = Graph(4, [(0, 2), (1, 2), (0, 3), (1, 3), (0, 1)])
        sf, stats = assemble(g, {0: set(), 1: set()}, {2, 3})
        assert sf.stars == {0: (2, 3)} or 2 in sf.stars[0]
        assert stats.attached == 2

    def test_promotion_when_no_center(self):
        g = path(2)
        sf, stats = assemble(g, {}, {0, 1})
        assert stats.promotions == 1
        assert sf.stars in ({1: (0,)}, {0: (1,)})

    def test_leafless_center_demoted(self):
        g = path(3)
        sf, stats = assemble(g, {0: set(), 1: {2}}, set())
        assert stats.demotions == 1
        assert sf.stars == {1: (0, 2)}

    def test_leafless_center_steals(self):
        # 0's only neighbor 1 is a leaf of 2, which has two leaves
        g = Graph(4, [(0, 1), (1, 2), (2, 3)])
        sf, stats = assemble(g, {0: set(), 2: {1, 3}}, set())
        assert stats.steals == 1
        assert sf.stars == {0: (1,), 2: (3,)}

    def test_sole_leaf_restructure(self):
        # 0's only neighbor 1 is the sole leaf of 2; merge into a star at 1
        g = Graph(3, [(0, 1), (1, 2)])
        sf, stats = assemble(g, {0: set(), 2: {1}}, set())
        assert stats.restructures == 1
        assert sf.stars == {1: (0, 2)}

    def test_isolated_vertex_rejected(self):
        g = Graph(2, [])
        with pytest.raises(GraphError):
            assemble(g, {}, {0, 1})

    def test_protected_leaves_avoided(self):
        # unassigned 0 must promote a neighbor; prefers the non-protected 2
        g = Graph(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
        sf, _ = assemble(g, {3: {1, 2}}, {0}, protected=frozenset({1}))
        assert 2 in sf.stars and 0 in sf.stars[2]
