"""Graph parsing, masks, decomposition, and family recognition."""

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pmsp import (
    Graph,
    GraphParseError,
    SelfLoopError,
    VertexSet,
    bipartition,
    blocks_and_cut_vertices,
    complete_bipartite_graph,
    complete_graph,
    complete_multipartite_graph,
    connected_components,
    cycle_graph,
    induced_subgraph,
    is_connected,
    line_graph,
    parse_graph,
    parse_graph_json,
    path_graph,
    pseudotree_profile,
)
from pmsp.graph import (
    classify_block,
    cut_vertex_mask,
    has_odd_cycle_ge5,
    is_critical,
    neighborhood,
    odd_closed_walk,
)

from .conftest import FIXTURES, three_block_graph


def random_graph_strategy(max_n: int = 8):
    def build(draw):
        n = draw(st.integers(min_value=1, max_value=max_n))
        pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
        chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
        return Graph(n, tuple(chosen))

    return st.composite(lambda draw: build(draw))()


class TestParsing:
    def test_edge_list(self):
        g = parse_graph("1 2\n2 3\n\n# comment\n3 1\n")
        assert g.n == 3
        assert g.edges == ((1, 2), (1, 3), (2, 3))

    def test_json_round_trip(self):
        g = cycle_graph(5)
        again = parse_graph_json(json.dumps(g.to_json()))
        assert again == g

    def test_fixture_file(self):
        g = parse_graph((FIXTURES / "c4.edges").read_text())
        assert g == cycle_graph(4)

    def test_isolated_vertex_via_json(self):
        g = parse_graph_json('{"n": 3, "edges": [[1, 2]]}')
        assert g.n == 3
        assert g.degree(3) == 0

    def test_rejects_self_loop(self):
        with pytest.raises(SelfLoopError):
            parse_graph("1 1\n")

    def test_rejects_garbage(self):
        with pytest.raises(GraphParseError):
            parse_graph("1 2 3\n")

    def test_rejects_bad_json(self):
        with pytest.raises(GraphParseError):
            parse_graph_json('{"edges": [[1, 2]]}')

    def test_duplicate_edges_collapse(self):
        g = parse_graph("1 2\n2 1\n1 2\n")
        assert g.edge_count == 1


class TestVertexSet:
    def test_members_sorted(self):
        s = VertexSet.from_vertices([3, 1], 4)
        assert s.members() == (1, 3)
        assert len(s) == 2
        assert 3 in s and 2 not in s

    def test_set_algebra(self):
        a = VertexSet.from_vertices([1, 2], 4)
        b = VertexSet.from_vertices([2, 3], 4)
        assert a.union(b).members() == (1, 2, 3)
        assert a.intersection(b).members() == (2,)
        assert a.difference(b).members() == (1,)
        assert a.complement().members() == (3, 4)
        assert a.issubset(a.union(b))


class TestConnectivity:
    def test_components(self):
        g = Graph(5, ((1, 2), (3, 4)))
        comps = [c.members() for c in connected_components(g)]
        assert comps == [(1, 2), (3, 4), (5,)]
        assert not is_connected(g)

    def test_single_vertex_connected(self):
        assert is_connected(Graph(1, ()))


class TestBipartition:
    def test_even_cycle(self):
        v1, v2 = bipartition(cycle_graph(6))
        assert v1.members() == (1, 3, 5)
        assert v2.members() == (2, 4, 6)

    def test_odd_cycle_returns_none(self):
        assert bipartition(cycle_graph(5)) is None

    def test_odd_walk_reported(self):
        walk = odd_closed_walk(cycle_graph(5))
        assert walk is not None
        assert len(walk) % 2 == 1 or walk[0] == walk[-1]

    @given(st.integers(min_value=3, max_value=9))
    def test_cycle_parity(self, n):
        g = cycle_graph(n)
        if n % 2 == 0:
            assert bipartition(g) is not None
            assert odd_closed_walk(g) is None
        else:
            assert bipartition(g) is None
            assert odd_closed_walk(g) is not None


class TestBlocks:
    def test_path_blocks_are_edges(self):
        decomp = blocks_and_cut_vertices(path_graph(4))
        assert sorted(decomp.blocks) == [((1, 2),), ((2, 3),), ((3, 4),)]
        assert decomp.cut_vertices.members() == (2, 3)

    def test_cycle_is_one_block(self):
        decomp = blocks_and_cut_vertices(cycle_graph(5))
        assert len(decomp.blocks) == 1
        assert len(decomp.cut_vertices) == 0

    def test_three_block_graph(self):
        decomp = blocks_and_cut_vertices(three_block_graph())
        kinds = sorted(str(k) for k in decomp.block_kinds)
        assert kinds == ["CompleteBipartite(2,3)", "CompleteBipartite(3,3)", "K4"]
        assert decomp.cut_vertices.members() == (1, 4)

    def test_blocks_partition_edges(self, connected_7):
        for g in connected_7[:300]:
            decomp = blocks_and_cut_vertices(g)
            seen = sorted(e for block in decomp.blocks for e in block)
            assert seen == sorted(g.edges)

    def test_classify_single_edge(self):
        assert str(classify_block(complete_graph(2))) == "CompleteBipartite(1,1)"

    def test_classify_triangle_is_k11q(self):
        assert str(classify_block(complete_graph(3))) == "K11n(1)"

    def test_classify_k4(self):
        assert classify_block(complete_graph(4)).name == "K4"

    def test_classify_k11q(self):
        g = complete_multipartite_graph(1, 1, 3)
        kind = classify_block(g)
        assert kind.name == "K11n" and kind.params == (3,)

    def test_classify_other(self):
        assert classify_block(cycle_graph(5)).name == "Other"

    def test_cut_vertex_mask_star(self):
        g = complete_bipartite_graph(1, 4)
        assert cut_vertex_mask(g) == 1  # vertex v maps to bit v - 1


class TestInducedSubgraph:
    def test_relabels_in_order(self):
        g = cycle_graph(5)
        sub = induced_subgraph(g, VertexSet.from_vertices([2, 3, 5], 5))
        # old 2,3,5 become 1,2,3; only the 2-3 edge survives
        assert sub.n == 3
        assert sub.edges == ((1, 2),)

    def test_neighborhood_excludes_set(self):
        g = cycle_graph(5)
        s = VertexSet.from_vertices([1, 2], 5)
        assert neighborhood(g, s).members() == (3, 5)


class TestFamilies:
    def test_pseudotree_profile_of_tree(self):
        prof = pseudotree_profile(path_graph(5))
        assert prof.cycle is None
        assert prof.cycle_parity == "none"
        assert prof.leaves.members() == (1, 5)
        assert prof.internal_vertices.members() == (2, 3, 4)

    def test_pseudotree_profile_of_cycle(self):
        prof = pseudotree_profile(cycle_graph(6))
        assert prof.cycle_parity == "even"
        assert prof.cycle_vertices.members() == (1, 2, 3, 4, 5, 6)
        assert len(prof.leaves) == 0

    def test_pseudotree_profile_cycle_order(self):
        g = Graph(5, ((1, 2), (2, 3), (3, 1), (3, 4), (4, 5)))
        prof = pseudotree_profile(g)
        assert prof.cycle_parity == "odd"
        assert set(prof.cycle) == {1, 2, 3}
        assert prof.leaves.members() == (5,)

    def test_too_many_edges_not_pseudotree(self):
        assert pseudotree_profile(complete_graph(4)) is None

    def test_has_odd_cycle_ge5(self):
        assert has_odd_cycle_ge5(cycle_graph(5))
        assert not has_odd_cycle_ge5(complete_graph(3))
        assert not has_odd_cycle_ge5(cycle_graph(6))
        assert has_odd_cycle_ge5(complete_graph(5))

    def test_critical_odd_cycle(self):
        assert is_critical(cycle_graph(5))
        assert not is_critical(cycle_graph(6))
        assert not is_critical(path_graph(3))


class TestLineGraph:
    def test_line_graph_of_path(self):
        lg = line_graph(path_graph(4))
        assert lg.n == 3
        assert lg.edges == ((1, 2), (2, 3))

    def test_line_graph_of_triangle(self):
        lg = line_graph(complete_graph(3))
        assert lg == complete_graph(3)


class TestBuilders:
    def test_complete_multipartite_builder(self):
        g = complete_multipartite_graph(2, 2)
        assert g == complete_bipartite_graph(2, 2)

    def test_degree_sum_is_twice_edges(self, connected_7):
        for g in connected_7[:200]:
            assert sum(g.degree(v) for v in g.vertices()) == 2 * g.edge_count

    @settings(max_examples=60)
    @given(random_graph_strategy())
    def test_components_partition_vertices(self, g):
        comps = connected_components(g)
        seen = sorted(v for c in comps for v in c.members())
        assert seen == list(g.vertices())
