from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from tricliq import (
    GraphError,
    WeightVector,
    complete,
    edge_weight_vector,
    enumerate_triangles,
    min_max,
    moon_moser,
    ring_sum,
    vertex_weight_vector,
)

from conftest import gnp


class TestEnumeration:
    def test_k4_has_four_triangles(self):
        tris = enumerate_triangles(complete(4))
        assert len(tris) == 4
        assert [t.vertices for t in tris] == [
            (1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]

    @pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
    def test_complete_graph_counts(self, n):
        assert len(enumerate_triangles(complete(n))) == len(
            list(combinations(range(n), 3)))

    def test_moon_moser_4_count(self):
        assert len(enumerate_triangles(moon_moser(4))) == 108

    def test_fixture_counts(self, g1, g2, g3, g4, turan13):
        for fx in (g1, g2, g3, g4, turan13):
            assert len(enumerate_triangles(fx.graph)) == fx.triangle_count, fx.name

    def test_triangle_free_graph(self):
        assert enumerate_triangles(moon_moser(2)) == ()

    def test_ids_are_positional(self, g3):
        tris = enumerate_triangles(g3.graph)
        assert [t.id for t in tris] == list(range(1, 40))

    def test_count_bound(self, g4):
        g = g4.graph
        assert len(enumerate_triangles(g)) <= g.n * (g.n - 1) * (g.n - 2) // 6

    def test_structure(self, g3):
        g = g3.graph
        for t in enumerate_triangles(g):
            # the three edges connect exactly the three vertex pairs
            pairs = {g.endpoints(e) for e in t.edges}
            assert pairs == set(combinations(t.vertices, 2))
            # the edge sets of the three single edges ring-sum to the triangle
            assert ring_sum([{e} for e in t.edges]) == t.edge_set()


class TestWeightVectors:
    def test_k4_edge_weights_all_two(self):
        g = complete(4)
        w = edge_weight_vector(g, enumerate_triangles(g))
        assert w.to_list() == [2] * 6

    def test_k4_vertex_weights_all_three(self):
        g = complete(4)
        w = vertex_weight_vector(g, enumerate_triangles(g))
        assert w.to_list() == [3] * 4

    def test_g1_initial_vector_matches_table(self, g1):
        w = edge_weight_vector(g1.graph, enumerate_triangles(g1.graph))
        assert w.to_list() == g1.expected["p0"]
        assert min_max(w) == (2, 5, False)

    def test_moon_moser_4_uniform(self):
        g = moon_moser(4)
        w = edge_weight_vector(g, enumerate_triangles(g))
        assert set(w) == {6}

    def test_moon_moser_3_vertex_weights(self):
        g = moon_moser(3)
        w = vertex_weight_vector(g, enumerate_triangles(g))
        assert w.to_list() == [9] * 9

    def test_turan13_weights_by_part_pair(self, turan13):
        g = turan13.graph
        w = edge_weight_vector(g, enumerate_triangles(g))
        assert w.to_list() == turan13.expected["p0"]
        part = lambda v: (v - 1) // 3 if v <= 9 else 3
        for e in range(1, g.m + 1):
            u, v = g.endpoints(e)
            expected = 6 if (part(u) == 3 or part(v) == 3) else 7
            assert w.weight(e) == expected

    def test_triangle_free_all_zero(self):
        g = moon_moser(2)
        assert set(edge_weight_vector(g, ()).to_list()) == {0}
        assert set(vertex_weight_vector(g, ()).to_list()) == {0}

    def test_out_of_range_edge_rejected(self):
        from tricliq import Triangle
        bogus = Triangle(id=1, vertices=(1, 2, 3), edges=(1, 2, 99))
        with pytest.raises(GraphError):
            edge_weight_vector(complete(3), [bogus])

    def test_out_of_range_vertex_rejected(self):
        from tricliq import Triangle
        bogus = Triangle(id=1, vertices=(1, 2, 99), edges=(1, 2, 3))
        with pytest.raises(GraphError):
            vertex_weight_vector(complete(3), [bogus])


class TestMinMax:
    def test_g1_p0(self, g1):
        assert min_max(g1.expected["p0"]) == (2, 5, False)

    def test_zeros_excluded(self, g1):
        assert min_max(g1.expected["p1"]) == (2, 4, False)

    def test_all_zero_flag(self):
        assert min_max([0, 0]) == (0, 0, True)
        assert min_max(WeightVector((0, 0, 0), "edge")).all_zero


@given(st.integers(3, 14), st.sampled_from([0.2, 0.4, 0.6, 0.8]),
       st.integers(0, 10**6))
def test_edge_weight_equals_common_neighbor_count(n, p, seed):
    # independent route: weight of (u,v) must equal |N(u) & N(v)|
    g = gnp(n, p, seed)
    w = edge_weight_vector(g, enumerate_triangles(g))
    for e in range(1, g.m + 1):
        u, v = g.endpoints(e)
        assert w.weight(e) == len(g.neighbors(u) & g.neighbors(v))


@given(st.integers(3, 14), st.sampled_from([0.3, 0.6]), st.integers(0, 10**6))
def test_weight_sums_are_three_times_triangle_count(n, p, seed):
    g = gnp(n, p, seed)
    tris = enumerate_triangles(g)
    assert sum(edge_weight_vector(g, tris)) == 3 * len(tris)
    assert sum(vertex_weight_vector(g, tris)) == 3 * len(tris)


def test_k4_subgraph_ring_sum_is_empty():
    # the four triangles of any K4 cancel over GF(2)
    tris = enumerate_triangles(complete(4))
    assert ring_sum([t.edge_set() for t in tris]) == frozenset()


def test_k4_subgraph_of_larger_graph_ring_sum_is_empty(g3):
    # {1,2,3,8} induces a K4 inside g3; its four triangles cancel too
    g = g3.graph
    quad = {1, 2, 3, 8}
    tris = [t for t in enumerate_triangles(g) if set(t.vertices) <= quad]
    assert len(tris) == 4
    assert ring_sum([t.edge_set() for t in tris]) == frozenset()


def test_k5_ring_sum_is_full_edge_set():
    # K5 puts each edge in three triangles, so the parity flips: the sum is
    # every edge, not the empty set
    g = complete(5)
    tris = enumerate_triangles(g)
    assert ring_sum([t.edge_set() for t in tris]) == frozenset(range(1, 11))


def test_internal_edge_membership_in_cliques(g3):
    # inside an L-clique every edge lies in exactly L-2 of its triangles
    g = g3.graph
    clique = [1, 2, 3, 8, 11]
    tris = [t for t in enumerate_triangles(g) if set(t.vertices) <= set(clique)]
    for u, v in combinations(clique, 2):
        e = g.edge_id(u, v)
        assert sum(e in t.edges for t in tris) == len(clique) - 2
