"""
Node classification used by the seeker's strategy.

    S   isolated nodes
    L   leaves (degree one)
    M   nodes with exactly one leaf neighbour
    SL  leaves attached to a node of M
    R   everything else; GR is the subgraph induced on R
    D   nodes of R lying in two-node components of GR

An isolated edge {a, b} (a < b) makes both endpoints qualify for M and SL at
once. The lower endpoint is kept in M and the higher one in SL so that the
four sets S, SL, M, R partition the nodes and |SL| = |M|.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, components, induced_subgraph


@dataclass(frozen=True)
class SeekerPartition:
    singletons: frozenset[int]
    leaves: frozenset[int]
    leaf_neighbor_count: tuple[int, ...]
    m_nodes: frozenset[int]
    singleton_leaves: frozenset[int]
    r_nodes: frozenset[int]
    gr: Graph
    gr_nodes: tuple[int, ...]  # gr id -> original id
    d_gr: frozenset[int]  # original ids

    @property
    def s(self) -> int:
        return len(self.singletons)

    @property
    def m(self) -> int:
        return len(self.m_nodes)

    @property
    def r(self) -> int:
        return len(self.r_nodes)

    def gr_leaf_counts(self) -> dict[int, int]:
        """l_i(GR) keyed by original node id."""
        gr_leaves = {p for p in self.gr.nodes if self.gr.degree(p) == 1}
        return {
            self.gr_nodes[p]: sum(1 for q in self.gr.adjacency[p] if q in gr_leaves) for p in self.gr.nodes
        }

    def gr_leaves(self) -> frozenset[int]:
        """L(GR) in original ids."""
        return frozenset(self.gr_nodes[p] for p in self.gr.nodes if self.gr.degree(p) == 1)


def classify(g: Graph) -> SeekerPartition:
    degree = g.degrees()
    singletons = frozenset(i for i in g.nodes if degree[i] == 0)
    leaves = frozenset(i for i in g.nodes if degree[i] == 1)
    leaf_count = tuple(sum(1 for j in g.adjacency[i] if j in leaves) for i in g.nodes)

    m_nodes = {i for i in g.nodes if leaf_count[i] == 1}
    for i in leaves:
        (j,) = g.adjacency[i]
        if j in leaves and i > j:
            m_nodes.discard(i)
    singleton_leaves = frozenset(
        i for i in leaves if i not in m_nodes and next(iter(g.adjacency[i])) in m_nodes
    )
    m_frozen = frozenset(m_nodes)

    r_nodes = frozenset(g.nodes) - singletons - singleton_leaves - m_frozen
    gr, mapping = induced_subgraph(g, r_nodes)
    back = tuple(sorted(mapping, key=mapping.get))
    d_gr = frozenset(
        back[p] for part in components(gr).components if len(part) == 2 for p in part
    )
    return SeekerPartition(
        singletons=singletons,
        leaves=leaves,
        leaf_neighbor_count=leaf_count,
        m_nodes=m_frozen,
        singleton_leaves=singleton_leaves,
        r_nodes=r_nodes,
        gr=gr,
        gr_nodes=back,
        d_gr=d_gr,
    )
