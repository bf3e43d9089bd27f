import random

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings

from distpres.errors import Disconnected, EmptySet, OutOfRange, SelfLoop, TooLarge
from distpres.families import complete, cycle, path
from distpres.graph import (
    UNREACHABLE,
    apsp,
    build_graph,
    cut_vertices,
    diameter,
    graph_power,
    induced_subgraph,
    is_connected,
    mask_of,
    members,
    min_degree,
    neighborhood,
)
from oracles import random_graph, to_nx
from strategies import graphs


class TestBuildGraph:
    def test_single_vertex(self):
        g = build_graph(1, [])
        assert g.n == 1 and g.size == 0

    def test_cycle(self, c5):
        assert c5.size == 5
        assert all(c5.degree(v) == 2 for v in range(5))

    def test_duplicates_collapse(self):
        g = build_graph(3, [(0, 1), (0, 1), (1, 2)])
        assert g.edges() == [(0, 1), (1, 2)]

    def test_reversed_duplicate_collapses(self):
        assert build_graph(2, [(0, 1), (1, 0)]).size == 1

    def test_out_of_range(self):
        with pytest.raises(OutOfRange):
            build_graph(3, [(0, 3)])

    def test_self_loop(self):
        with pytest.raises(SelfLoop):
            build_graph(3, [(1, 1)])

    def test_order_cap(self):
        build_graph(64, [(0, 63)])
        with pytest.raises(TooLarge):
            build_graph(65, [])


class TestApsp:
    def test_c5(self, c5):
        d = apsp(c5)
        # v1..v5 are indices 0..4
        assert d[0, 2] == 2 and d[0, 3] == 2

    def test_path(self):
        assert apsp(path(4))[0, 3] == 3

    def test_disconnected_sentinel(self):
        d = apsp(build_graph(4, [(0, 1), (2, 3)]))
        assert d[0, 2] == UNREACHABLE and d[1, 3] == UNREACHABLE
        assert d[0, 1] == 1

    def test_read_only(self, c5):
        with pytest.raises(ValueError):
            apsp(c5)[0, 1] = 7

    @settings(max_examples=150, deadline=None)
    @given(graphs(max_n=9))
    def test_matches_networkx_and_metric_axioms(self, g):
        d = apsp(g).astype(int)
        ref = dict(nx.all_pairs_shortest_path_length(to_nx(g)))
        for u in range(g.n):
            assert d[u, u] == 0
            for v in range(g.n):
                assert d[u, v] == ref[u].get(v, UNREACHABLE)
                assert d[u, v] == d[v, u]
                assert (d[u, v] == 1) == g.has_edge(u, v)
        fin = d >= 0
        for w in range(g.n):
            via = d[:, [w]] + d[[w], :]
            ok = ~(fin & fin[:, [w]] & fin[[w], :]) | (d <= via)
            assert ok.all()


class TestInducedSubgraph:
    def test_arc_is_path(self, c5):
        sub, index = induced_subgraph(c5, mask_of([0, 1, 2]))
        assert sub.edges() == [(0, 1), (1, 2)]
        assert index == {0: 0, 1: 1, 2: 2}

    def test_non_adjacent_pair(self, c5):
        sub, index = induced_subgraph(c5, mask_of([0, 2]))
        assert sub.n == 2 and sub.size == 0
        assert index == {0: 0, 2: 1}

    def test_empty(self, c5):
        with pytest.raises(EmptySet):
            induced_subgraph(c5, 0)

    @settings(max_examples=60, deadline=None)
    @given(graphs())
    def test_identity(self, g):
        sub, index = induced_subgraph(g, g.vertices)
        assert sub == g
        assert index == {v: v for v in range(g.n)}


class TestGraphPower:
    def test_first_power_is_identity(self, c5):
        assert graph_power(c5, 1) == c5

    def test_c5_squared_is_k5(self, c5):
        assert graph_power(c5, 2) == complete(5)

    def test_p4_squared(self):
        assert sorted(graph_power(path(4), 2).edges()) == [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]

    def test_unreachable_never_joined(self):
        g = build_graph(4, [(0, 1), (2, 3)])
        assert graph_power(g, 5) == g

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=8, connected=True))
    def test_power_at_diameter_is_complete(self, g):
        assert graph_power(g, max(diameter(g), 1)) == complete(g.n)


class TestConnectivity:
    def test_p3_middle(self):
        assert members(cut_vertices(path(3))) == [1]

    def test_cycle_has_none(self, c5):
        assert cut_vertices(c5) == 0

    def test_bowtie(self, bowtie):
        assert members(cut_vertices(bowtie)) == [2]

    def test_disconnected_raises(self):
        with pytest.raises(Disconnected):
            cut_vertices(build_graph(3, [(0, 1)]))

    def test_matches_deletion_definition_and_networkx(self):
        rng = random.Random(11)
        for _ in range(300):
            n = rng.randint(2, 8)
            g = random_graph(n, rng.random(), rng)
            if not is_connected(g):
                assert not nx.is_connected(to_nx(g))
                continue
            expected = set(nx.articulation_points(to_nx(g)))
            got = set(members(cut_vertices(g)))
            assert got == expected
            for v in range(n):
                rest = g.vertices & ~(1 << v)
                deleted_disconnects = bool(rest) and not is_connected(g, rest)
                assert (v in got) == deleted_disconnects


class TestNeighborhood:
    def test_open(self, c5):
        # v1 is index 0, neighbours v2, v5
        assert members(neighborhood(c5, 0)) == [1, 4]

    def test_closed(self, c5):
        assert members(neighborhood(c5, 0, closed=True)) == [0, 1, 4]

    def test_out_of_range(self, c5):
        with pytest.raises(OutOfRange):
            neighborhood(c5, 5)

    def test_min_degree(self):
        assert min_degree(complete(4)) == 3
        assert min_degree(path(3)) == 1
        assert min_degree(cycle(6)) == 2


def test_distances_are_numpy_int():
    assert apsp(path(3)).dtype.kind == "i"
    assert np.array_equal(apsp(path(3)), [[0, 1, 2], [1, 0, 1], [2, 1, 0]])
