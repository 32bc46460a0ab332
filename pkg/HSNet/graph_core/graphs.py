"""
Undirected simple graphs over the nodes 0..n-1.

Graph values are immutable and hashable so they can be shared between oracle
workers and used as dictionary keys. Connectivity queries are answered by
networkx on a frozen view built once per graph.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple

import networkx as nx
from django.core.exceptions import ValidationError

Edge = tuple[int, int]


def _normalize_edge(i: int, j: int) -> Edge:
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; edges are stored as (i, j) pairs with i < j."""

    node_count: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.node_count < 0:
            raise ValidationError("node_count must be nonnegative", code="invalid_node")
        for i, j in self.edges:
            if not (0 <= i < j < self.node_count):
                raise ValidationError(
                    "Edge (%(i)s, %(j)s) is not a normalized pair over %(n)s nodes",
                    code="invalid_node",
                    params={"i": i, "j": j, "n": self.node_count},
                )

    @classmethod
    def from_edges(cls, node_count: int, edges: Iterable[tuple[int, int]] = ()) -> "Graph":
        """
        Build a graph from unordered pairs.

        Raises:
            ValidationError: on self-loops, duplicate edges or ids out of range
        """
        seen: set[Edge] = set()
        for raw in edges:
            i, j = int(raw[0]), int(raw[1])
            if i == j:
                raise ValidationError("Self-loop on node %(i)s", code="invalid_edge", params={"i": i})
            for node in (i, j):
                if not 0 <= node < node_count:
                    raise ValidationError(
                        "Node %(k)s out of range for %(n)s nodes",
                        code="invalid_node",
                        params={"k": node, "n": node_count},
                    )
            edge = _normalize_edge(i, j)
            if edge in seen:
                raise ValidationError("Duplicate edge %(e)s", code="invalid_edge", params={"e": edge})
            seen.add(edge)
        return cls(node_count, frozenset(seen))

    @classmethod
    def empty(cls, node_count: int) -> "Graph":
        return cls(node_count, frozenset())

    @property
    def nodes(self) -> range:
        return range(self.node_count)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        neighbours: list[set[int]] = [set() for _ in range(self.node_count)]
        for i, j in self.edges:
            neighbours[i].add(j)
            neighbours[j].add(i)
        return tuple(frozenset(s) for s in neighbours)

    @cached_property
    def nx_graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.node_count))
        g.add_edges_from(self.edges)
        return nx.freeze(g)

    def check_node(self, k: int) -> None:
        if not 0 <= k < self.node_count:
            raise ValidationError(
                "Node %(k)s out of range for %(n)s nodes",
                code="invalid_node",
                params={"k": k, "n": self.node_count},
            )

    def neighbors(self, k: int) -> frozenset[int]:
        self.check_node(k)
        return self.adjacency[k]

    def closed_neighborhood(self, k: int) -> frozenset[int]:
        return self.neighbors(k) | {k}

    def degree(self, k: int) -> int:
        return len(self.neighbors(k))

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.adjacency)

    def to_networkx(self) -> nx.Graph:
        """Mutable networkx copy."""
        return nx.Graph(self.nx_graph)

    def relabel(self, order: Iterable[int]) -> "Graph":
        """Graph with node order[p] renamed to p; order must be a permutation."""
        position = {node: p for p, node in enumerate(order)}
        if sorted(position) != list(self.nodes):
            raise ValidationError("Relabeling is not a permutation", code="invalid_node")
        return Graph(self.node_count, frozenset(_normalize_edge(position[i], position[j]) for i, j in self.edges))

    def disjoint_union(self, other: "Graph") -> "Graph":
        shift = self.node_count
        moved = {(i + shift, j + shift) for i, j in other.edges}
        return Graph(self.node_count + other.node_count, self.edges | frozenset(moved))

    def __getstate__(self):
        # cached views are rebuilt on demand after unpickling
        return {"node_count": self.node_count, "edges": self.edges}

    def __str__(self):
        return f"Graph(n={self.node_count}, edges={self.sorted_edges()})"


@dataclass(frozen=True)
class ComponentPartition:
    """Connected components ordered by smallest member."""

    components: tuple[frozenset[int], ...]
    component_of: tuple[int, ...]

    def size_of(self, node: int) -> int:
        return len(self.components[self.component_of[node]])

    def sizes(self) -> list[int]:
        return [len(c) for c in self.components]


class Relabeled(NamedTuple):
    """A derived graph plus the old-id to new-id mapping of its nodes."""

    graph: Graph
    mapping: dict[int, int]


def components(g: Graph) -> ComponentPartition:
    parts = sorted((frozenset(c) for c in nx.connected_components(g.nx_graph)), key=min)
    owner = [0] * g.node_count
    for index, part in enumerate(parts):
        for node in part:
            owner[node] = index
    return ComponentPartition(tuple(parts), tuple(owner))


def induced_subgraph(g: Graph, u: Iterable[int]) -> Relabeled:
    """
    Subgraph on u; the survivors keep their relative order and are numbered 0..|u|-1.

    Raises:
        ValidationError: if a node of u is out of range
    """
    kept = sorted(set(u))
    for node in kept:
        g.check_node(node)
    mapping = {old: new for new, old in enumerate(kept)}
    edges = frozenset((mapping[i], mapping[j]) for i, j in g.edges if i in mapping and j in mapping)
    return Relabeled(Graph(len(kept), edges), mapping)


def remove_node(g: Graph, k: int) -> Relabeled:
    """Residual network G - k."""
    g.check_node(k)
    return induced_subgraph(g, (node for node in g.nodes if node != k))


def is_two_connected(g: Graph) -> bool:
    # Graphs on two or fewer nodes never count as 2-connected.
    if g.node_count <= 2:
        return False
    return nx.is_biconnected(g.nx_graph)


def is_connected(g: Graph) -> bool:
    return g.node_count > 0 and nx.is_connected(g.nx_graph)
