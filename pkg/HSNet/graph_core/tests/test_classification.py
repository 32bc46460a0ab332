"""
Tests for the seeker-side node classification.
"""
import pytest

from graph_core.classification import classify
from graph_core.graphs import Graph
from graph_core.structure import is_maximal_core_periphery


def cycle(k):
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def maximal_cp_8():
    # core 0-1-2-3-0, leaf 4+i on core node i
    edges = [(0, 1), (1, 2), (2, 3), (0, 3)] + [(i, 4 + i) for i in range(4)]
    return Graph.from_edges(8, edges)


def assert_partition(part, n):
    sets = [part.singletons, part.singleton_leaves, part.m_nodes, part.r_nodes]
    assert sum(len(s) for s in sets) == n
    assert frozenset().union(*sets) == frozenset(range(n))
    assert part.singleton_leaves <= part.leaves


@pytest.mark.unit
class TestClassify:
    """Test S, L, M, SL, R, GR and D(GR)."""

    def test_path_of_four(self):
        """Test path a-b-c-d."""
        part = classify(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)]))
        assert part.leaves == {0, 3}
        assert part.m_nodes == {1, 2}
        assert part.singleton_leaves == {0, 3}
        assert part.singletons == set()
        assert part.r_nodes == set()

    def test_cycle_of_six(self):
        """Test that every cycle node lies in R."""
        part = classify(cycle(6))
        assert part.r_nodes == set(range(6))
        assert part.gr == cycle(6)
        assert part.d_gr == set()
        assert part.m == 0

    def test_maximal_cp_on_eight(self):
        """Test that the core is M and the periphery is SL."""
        part = classify(maximal_cp_8())
        assert part.m_nodes == {0, 1, 2, 3}
        assert part.singleton_leaves == {4, 5, 6, 7}
        assert part.r_nodes == set()
        assert all(part.leaf_neighbor_count[i] == 1 for i in range(4))

    def test_isolated_edge_is_split(self):
        """Test the lower endpoint of an isolated edge goes to M."""
        part = classify(Graph.from_edges(3, [(0, 2)]))
        assert part.m_nodes == {0}
        assert part.singleton_leaves == {2}
        assert part.singletons == {1}
        assert_partition(part, 3)

    def test_star_centre_with_two_leaves_is_in_r(self):
        """Test a node with two leaf neighbours is not in M."""
        part = classify(Graph.from_edges(3, [(0, 1), (0, 2)]))
        assert part.m_nodes == set()
        assert part.r_nodes == {0, 1, 2}
        assert part.gr_leaf_counts()[0] == 2
        assert part.gr_leaves() == {1, 2}

    def test_pair_components_of_gr(self):
        """Test D(GR) collects nodes in two-node components of GR."""
        # leaves 4 and 5 hang off 0 and 3, leaving the edge 1-2 as all of GR
        g = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (0, 4), (3, 5), (1, 3)])
        part = classify(g)
        assert_partition(part, 6)
        assert part.m_nodes == {0, 3}
        assert part.r_nodes == {1, 2}
        assert part.d_gr == {1, 2}

    def test_partition_on_all_small_graphs(self, all_graphs_up_to_6):
        """Test the partition invariant on every graph with n <= 6."""
        for g in all_graphs_up_to_6:
            part = classify(g)
            assert_partition(part, g.node_count)
            assert len(part.m_nodes) == len(part.singleton_leaves)

    def test_degree_one_graphs_have_empty_r(self):
        """Test that disjoint edges leave R empty."""
        g = Graph.from_edges(6, [(0, 1), (2, 3), (4, 5)])
        assert classify(g).r_nodes == set()


@pytest.mark.unit
class TestMaximalCorePeripheryRecogniser:
    """Test is_maximal_core_periphery."""

    def test_even_shape(self):
        """Test the 8-node maximal network is recognised."""
        roles = is_maximal_core_periphery(maximal_cp_8())
        assert roles is not None
        assert roles.periphery == {4, 5, 6, 7}
        assert roles.orphans == set()

    def test_path_of_four(self):
        """Test the 4-node path counts, its core being a single edge."""
        assert is_maximal_core_periphery(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])) is not None

    def test_odd_shape_needs_middle_orphan(self):
        """Test a 5-node network: one pair plus three orphans on a 4-cycle core."""
        g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])
        roles = is_maximal_core_periphery(g)
        assert roles is not None
        assert roles.middle_orphan == 2

    def test_cycle_is_not(self):
        """Test a cycle has no periphery."""
        assert is_maximal_core_periphery(cycle(6)) is None

    def test_core_must_be_two_connected(self):
        """Test a path-shaped core is rejected."""
        edges = [(0, 1), (1, 2), (0, 3), (1, 4), (2, 5)]
        assert is_maximal_core_periphery(Graph.from_edges(6, edges)) is None
