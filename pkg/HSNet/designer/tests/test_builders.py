"""
Tests for the network constructors.
"""
import pytest
from django.core.exceptions import ValidationError

from designer.builders import (
    ALL_SINGLETONS,
    CHORDED_CYCLE,
    CYCLE,
    MAXIMAL_CP_EVEN,
    MAXIMAL_CP_ODD,
    CorePeripherySpec,
    Network,
    build_chorded_cycle,
    build_core_periphery,
    build_cycle,
    build_maximal_cp,
    build_network,
    maximal_cp_spec,
)
from graph_core.classification import classify
from graph_core.graphs import Graph, is_two_connected
from graph_core.structure import is_maximal_core_periphery


def cycle_core(q):
    return frozenset((i, (i + 1) % q) if i + 1 < q else (0, q - 1) for i in range(q))


@pytest.mark.unit
class TestBuildCycle:
    """Test build_cycle."""

    def test_triangle(self):
        """Test k=3 is a triangle."""
        assert build_cycle(3) == Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])

    def test_square_degrees(self):
        """Test every node of C4 has degree 2."""
        assert build_cycle(4).degrees() == (2, 2, 2, 2)

    def test_twelve_is_two_connected(self):
        """Test C12 is 2-connected."""
        g = build_cycle(12)
        assert g.edge_count == 12
        assert is_two_connected(g)

    def test_too_small(self):
        """Test k < 3 is rejected."""
        with pytest.raises(ValidationError) as exc:
            build_cycle(2)
        assert exc.value.code == "topology"


@pytest.mark.unit
class TestCorePeriphery:
    """Test CorePeripherySpec and build_core_periphery."""

    def test_even_maximal_on_eight(self, maximal_cp8):
        """Test q=4 with a cycle core and m=4."""
        spec = CorePeripherySpec(4, 4, cycle_core(4), (0, 1, 2, 3))
        assert build_core_periphery(spec) == maximal_cp8
        assert spec.orphans == frozenset()

    def test_two_orphans(self):
        """Test q=5, m=3: classify puts the paired core in M and the periphery in SL."""
        spec = CorePeripherySpec(5, 3, cycle_core(5), (0, 1, 2))
        g = build_core_periphery(spec)
        part = classify(g)
        assert spec.orphans == {3, 4}
        assert part.m_nodes == {0, 1, 2}
        assert part.singleton_leaves == spec.periphery == {5, 6, 7}
        assert part.r_nodes == {3, 4}

    def test_large_shape(self):
        """Test 24 core nodes with 15 periphery nodes and 9 orphans."""
        spec = CorePeripherySpec(24, 15, cycle_core(24), tuple(range(15)))
        g = build_core_periphery(spec)
        assert g.node_count == 39
        assert len(spec.orphans) == 9
        assert all(g.degree(p) == 1 for p in spec.periphery)

    def test_rejects_shared_core_node(self):
        """Test two periphery nodes on one core node."""
        with pytest.raises(ValidationError):
            CorePeripherySpec(4, 2, cycle_core(4), (1, 1))

    def test_rejects_oversized_periphery(self):
        """Test m > q."""
        with pytest.raises(ValidationError):
            CorePeripherySpec(2, 3, frozenset({(0, 1)}), (0, 1, 1))

    def test_rejects_disconnected_core(self):
        """Test a core made of two separate edges."""
        with pytest.raises(ValidationError):
            CorePeripherySpec(4, 1, frozenset({(0, 1), (2, 3)}), (0,))

    def test_rejects_bad_middle_orphan(self):
        """Test a middle orphan that is not adjacent to exactly the other orphans."""
        with pytest.raises(ValidationError):
            CorePeripherySpec(5, 2, cycle_core(5), (0, 1), middle_orphan=2)


@pytest.mark.unit
class TestBuildMaximalCp:
    """Test the even and odd maximal core-periphery constructors."""

    def test_eight(self, maximal_cp8):
        """Test k=8 gives four leaves on a 4-cycle."""
        assert build_maximal_cp(8) == maximal_cp8

    def test_four_is_path(self, path4):
        """Test k=4 gives the path on four nodes, up to relabeling."""
        g = build_maximal_cp(4)
        assert sorted(g.degrees()) == sorted(path4.degrees())
        assert g.edge_count == 3
        assert is_maximal_core_periphery(g) is not None

    def test_sixteen(self):
        """Test k=16: 8 periphery nodes and a 2-connected 8-node core."""
        spec = maximal_cp_spec(16)
        g = build_maximal_cp(16)
        assert len(spec.periphery) == 8
        assert spec.orphans == frozenset()
        roles = is_maximal_core_periphery(g)
        assert roles is not None
        assert roles.core == spec.core

    def test_seventeen(self):
        """Test k=17: 7 periphery nodes, 3 orphans and the middle orphan rule."""
        spec = maximal_cp_spec(17)
        g = build_maximal_cp(17)
        assert len(spec.periphery) == 7
        assert spec.orphans == {7, 8, 9}
        assert spec.middle_orphan == 8
        assert g.neighbors(8) == {7, 9}
        roles = is_maximal_core_periphery(g)
        assert roles is not None
        assert roles.middle_orphan == 8

    def test_five(self):
        """Test k=5: one periphery node and three orphans on a 4-cycle core."""
        spec = maximal_cp_spec(5)
        assert (spec.q, spec.m, spec.middle_orphan) == (4, 1, 2)
        assert is_maximal_core_periphery(build_maximal_cp(5)) is not None

    def test_too_small(self):
        """Test k < 4 is rejected."""
        with pytest.raises(ValidationError):
            build_maximal_cp(3)


@pytest.mark.unit
class TestChordedCycle:
    """Test build_chorded_cycle."""

    def test_no_chords_is_cycle(self):
        """Test t=4 without chords is C12."""
        assert build_chorded_cycle(4) == build_cycle(12)

    def test_designated_nodes_keep_degree_two(self):
        """Test chords between non-designated nodes."""
        g = build_chorded_cycle(4, [(1, 5), (2, 7), (8, 11)])
        assert g.edge_count == 15
        assert all(g.degree(t) == 2 for t in (0, 3, 6, 9))
        assert is_two_connected(g)

    def test_chord_touching_designated(self):
        """Test a chord incident to a designated node is rejected."""
        with pytest.raises(ValidationError) as exc:
            build_chorded_cycle(4, [(3, 7)])
        assert exc.value.code == "topology"

    def test_chord_duplicating_cycle_edge(self):
        """Test a chord on an existing cycle edge is rejected."""
        with pytest.raises(ValidationError):
            build_chorded_cycle(4, [(1, 2)])

    def test_repeated_chord(self):
        """Test the same chord twice, in either orientation."""
        with pytest.raises(ValidationError):
            build_chorded_cycle(4, [(1, 5), (5, 1)])

    def test_too_small(self):
        """Test t < 2 is rejected."""
        with pytest.raises(ValidationError):
            build_chorded_cycle(1)


@pytest.mark.unit
class TestBuildNetwork:
    """Test padding with singletons and role bookkeeping."""

    def test_cycle_with_singletons(self):
        """Test the component comes first and singletons last."""
        net = build_network(9, 3, CYCLE)
        assert net.singletons == {6, 7, 8}
        assert net.component == frozenset(range(6))
        assert net.graph.degrees() == (2,) * 6 + (0,) * 3
        assert (net.n, net.s) == (9, 3)

    def test_odd_cp_roles(self):
        """Test roles of the odd maximal network on 7 nodes plus one singleton."""
        net = build_network(8, 1, MAXIMAL_CP_ODD)
        roles = net.roles()
        assert net.periphery == {5, 6}
        assert net.middle_orphan == 3
        assert roles[3] == "middle_orphan"
        assert roles[2] == "orphan"
        assert roles[0] == "core"
        assert roles[5] == "periphery"
        assert roles[7] == "singleton"

    def test_component_graph(self, maximal_cp8):
        """Test the component is recovered without the singletons."""
        assert build_network(10, 2, MAXIMAL_CP_EVEN).component_graph() == maximal_cp8

    def test_all_singletons(self):
        """Test the empty network."""
        net = build_network(5, 5, ALL_SINGLETONS)
        assert net.graph == Graph.empty(5)
        assert net.component == frozenset()

    def test_chorded_designated(self):
        """Test the designated set is recorded."""
        net = build_network(13, 1, CHORDED_CYCLE, [(1, 5)])
        assert net.designated == {0, 3, 6, 9}

    def test_parity_mismatch(self):
        """Test an even topology on an odd component."""
        with pytest.raises(ValidationError):
            build_network(9, 0, MAXIMAL_CP_EVEN)

    def test_chorded_needs_multiple_of_three(self):
        """Test n - s not divisible by 3."""
        with pytest.raises(ValidationError):
            build_network(10, 0, CHORDED_CYCLE)

    def test_unknown_topology(self):
        """Test an unknown tag."""
        with pytest.raises(ValidationError):
            build_network(6, 0, "star")
        with pytest.raises(ValidationError):
            Network("star", Graph.empty(1))
