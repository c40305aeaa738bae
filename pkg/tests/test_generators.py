import pytest

from starforest.generators import (
    complete_bipartite,
    paley_bipartite,
    quadratic_residues,
    random_regular,
    smallest_paley_prime,
    spanning_regular_subgraph,
)
from starforest.graph import GraphError


class TestRandomRegular:
    def test_forced_k4(self):
        g = random_regular(4, 3, seed=0)
        assert g.edge_count() == 6

    def test_forced_k6(self):
        g = random_regular(6, 5, seed=0)
        assert g.edge_count() == 15

    def test_simple_regular(self):
        g = random_regular(16, 3, seed=7)
        assert all(g.degree(v) == 3 for v in range(16))

    def test_deterministic(self):
        assert random_regular(40, 4, seed=11) == random_regular(40, 4, seed=11)
        assert random_regular(40, 4, seed=11) != random_regular(40, 4, seed=12)

    def test_parity_guard(self):
        with pytest.raises(GraphError):
            random_regular(5, 3)

    def test_degree_guard(self):
        with pytest.raises(GraphError):
            random_regular(4, 4)

    @pytest.mark.parametrize("d", [3, 4, 8])
    def test_many_seeds(self, d):
        for seed in range(50):
            g = random_regular(100, d, seed=seed)
            assert g.n == 100
            assert all(g.degree(v) == d for v in range(100))


class TestPaley:
    def test_vertex0_neighbors(self):
        g = paley_bipartite(13)
        non_residues = set(range(1, 13)) - quadratic_residues(13)
        assert non_residues == {2, 5, 6, 7, 8, 11}
        expected = sorted(13 + b for b in range(13) if (0 - b) % 13 in non_residues)
        assert list(g.adj[0]) == expected
        assert {b - 13 for b in g.adj[0]} == {11, 8, 7, 6, 5, 2}

    @pytest.mark.parametrize("p", [13, 17, 29])
    def test_regular(self, p):
        g = paley_bipartite(p)
        assert g.n == 2 * p
        assert all(g.degree(v) == (p - 1) // 2 for v in range(g.n))
        # bipartite: no edge inside a class
        for a in range(p):
            assert all(u >= p for u in g.adj[a])

    def test_not_prime(self):
        with pytest.raises(GraphError):
            paley_bipartite(4)

    def test_even_prime(self):
        with pytest.raises(GraphError):
            paley_bipartite(2)


class TestSmallestPaleyPrime:
    def test_values(self):
        assert smallest_paley_prime(3) == 7
        assert smallest_paley_prime(6) == 13
        assert smallest_paley_prime(8) == 17


class TestCompleteBipartite:
    def test_single_edge(self):
        g = complete_bipartite(1, 1)
        assert g.edge_count() == 1

    def test_3_8(self):
        g = complete_bipartite(3, 8)
        assert g.edge_count() == 24
        assert all(g.degree(v) == 8 for v in range(3))
        assert all(g.degree(v) == 3 for v in range(3, 11))

    def test_guard(self):
        with pytest.raises(GraphError):
            complete_bipartite(0, 5)


class TestSpanningRegularSubgraph:
    def k33(self):
        return complete_bipartite(3, 3)

    def test_perfect_matching(self):
        sub = spanning_regular_subgraph(self.k33(), 1, seed=0)
        assert all(sub.degree(v) == 1 for v in range(6))

    def test_full(self):
        g = self.k33()
        assert spanning_regular_subgraph(g, 3, seed=0) == g

    def test_paley_subgraph(self):
        g = paley_bipartite(13)
        sub = spanning_regular_subgraph(g, 4, seed=5)
        assert all(sub.degree(v) == 4 for v in range(sub.n))
        assert set(sub.edges()) <= set(g.edges())

    def test_not_regular_guard(self):
        with pytest.raises(GraphError):
            spanning_regular_subgraph(complete_bipartite(2, 3), 1)

    def test_not_bipartite_guard(self):
        from starforest.graph import Graph

        triangle = Graph(3, [(0, 1), (1, 2), (0, 2)])
        with pytest.raises(GraphError):
            spanning_regular_subgraph(triangle, 1)
