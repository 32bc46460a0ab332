"""Recognisers for the network shapes that appear in optimal designs."""
from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, Relabeled, components, induced_subgraph, is_connected, is_two_connected


@dataclass(frozen=True)
class CoreRoles:
    core: frozenset[int]
    periphery: frozenset[int]
    orphans: frozenset[int]
    middle_orphan: int | None


def non_singleton_part(g: Graph) -> Relabeled:
    """Subgraph on the nodes of degree >= 1, with its relabeling map."""
    return induced_subgraph(g, (i for i in g.nodes if g.adjacency[i]))


def _core_is_robust(h: Graph, core: frozenset[int]) -> bool:
    sub = induced_subgraph(h, core).graph
    if sub.node_count == 2:
        return sub.edge_count == 1
    return is_two_connected(sub)


def is_maximal_core_periphery(h: Graph) -> CoreRoles | None:
    """
    Recognise a maximal core-periphery network on all nodes of h.

    Even size k: k/2 leaves attached to distinct core nodes and a 2-connected
    core (a two-node core must be a single edge). Odd size k: (k-3)/2 such
    leaves, three orphaned core nodes, and one orphan whose neighbours are
    exactly the other two orphans.
    """
    k = h.node_count
    if k < 4 or not is_connected(h):
        return None
    periphery = frozenset(i for i in h.nodes if h.degree(i) == 1)
    anchors = [next(iter(h.adjacency[p])) for p in periphery]
    if len(set(anchors)) != len(anchors) or any(a in periphery for a in anchors):
        return None
    expected = k // 2 if k % 2 == 0 else (k - 3) // 2
    if len(periphery) != expected:
        return None
    core = frozenset(h.nodes) - periphery
    if not _core_is_robust(h, core):
        return None
    orphans = core - frozenset(anchors)
    if k % 2 == 0:
        return CoreRoles(core, periphery, orphans, None)
    for candidate in sorted(orphans):
        if h.adjacency[candidate] == orphans - {candidate}:
            return CoreRoles(core, periphery, orphans, candidate)
    return None


def component_sizes(g: Graph) -> list[int]:
    return components(g).sizes()
