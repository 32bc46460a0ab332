"""
Constructors for the networks that appear in optimal designs.

Every constructor numbers the non-singleton component first; singletons are
appended after it by `build_network`. Roles (core, periphery, orphans, the
middle orphan and the designated degree-2 set of chorded cycles) are recorded
at construction time and never searched for afterwards.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from django.core.exceptions import ValidationError

from graph_core.graphs import Edge, Graph, induced_subgraph, is_connected

CYCLE = "cycle"
CHORDED_CYCLE = "chorded_cycle"
MAXIMAL_CP_EVEN = "maximal_cp_even"
MAXIMAL_CP_ODD = "maximal_cp_odd"
ALL_SINGLETONS = "all_singletons"
TOPOLOGIES = (CYCLE, CHORDED_CYCLE, MAXIMAL_CP_EVEN, MAXIMAL_CP_ODD, ALL_SINGLETONS)


def _topology_error(message: str, **params) -> ValidationError:
    return ValidationError(message, code="topology", params=params)


def _cycle_edges(nodes: list[int]) -> set[Edge]:
    k = len(nodes)
    if k == 2:
        return {(min(nodes), max(nodes))}
    return {tuple(sorted((nodes[i], nodes[(i + 1) % k]))) for i in range(k)}


def build_cycle(k: int) -> Graph:
    """Cycle 0-1-...-(k-1)-0."""
    if k < 3:
        raise _topology_error("a cycle needs at least 3 nodes, got %(k)s", k=k)
    return Graph(k, frozenset(_cycle_edges(list(range(k)))))


@dataclass(frozen=True)
class CorePeripherySpec:
    """
    Core nodes are 0..q-1 and periphery nodes q..q+m-1; periphery node q+i
    hangs off core node pairing[i]. Core nodes without a periphery node are
    orphaned.
    """

    q: int
    m: int
    core_edges: frozenset[Edge]
    pairing: tuple[int, ...]
    middle_orphan: int | None = None

    def __post_init__(self):
        if self.m > self.q or self.q < 1:
            raise _topology_error("core size %(q)s is below the periphery size %(m)s", q=self.q, m=self.m)
        if len(self.pairing) != self.m:
            raise _topology_error("pairing must name one core node per periphery node")
        if len(set(self.pairing)) != self.m or any(not 0 <= c < self.q for c in self.pairing):
            raise _topology_error("periphery nodes must attach to distinct core nodes")
        core = Graph.from_edges(self.q, self.core_edges)
        if not is_connected(core):
            raise _topology_error("the core must be connected")
        if self.middle_orphan is not None:
            orphans = self.orphans
            if self.middle_orphan not in orphans or core.adjacency[self.middle_orphan] != orphans - {self.middle_orphan}:
                raise _topology_error("the middle orphan must neighbour exactly the other orphans")

    @property
    def size(self) -> int:
        return self.q + self.m

    @property
    def core(self) -> frozenset[int]:
        return frozenset(range(self.q))

    @property
    def periphery(self) -> frozenset[int]:
        return frozenset(range(self.q, self.q + self.m))

    @property
    def orphans(self) -> frozenset[int]:
        return self.core - frozenset(self.pairing)


def build_core_periphery(spec: CorePeripherySpec) -> Graph:
    edges = set(spec.core_edges)
    edges.update((c, spec.q + i) for i, c in enumerate(spec.pairing))
    return Graph.from_edges(spec.size, edges)


def maximal_cp_spec(k: int) -> CorePeripherySpec:
    """
    Maximal core-periphery layout on k >= 4 nodes with a cycle core.

    Even k: k/2 core nodes, each with a periphery node; a two-node core is a
    single edge, so k = 4 gives the path on four nodes. Odd k: (k-3)/2 paired
    core nodes 0..m-1 followed by the orphans m, m+1, m+2 on the core cycle,
    so the middle orphan m+1 neighbours exactly the other two.
    """
    if k < 4:
        raise _topology_error("a maximal core-periphery network needs at least 4 nodes, got %(k)s", k=k)
    if k % 2 == 0:
        q = m = k // 2
        return CorePeripherySpec(q, m, frozenset(_cycle_edges(list(range(q)))), tuple(range(m)))
    m = (k - 3) // 2
    q = m + 3
    return CorePeripherySpec(q, m, frozenset(_cycle_edges(list(range(q)))), tuple(range(m)), middle_orphan=m + 1)


def build_maximal_cp(k: int) -> Graph:
    return build_core_periphery(maximal_cp_spec(k))


def chorded_cycle_designated(t: int) -> frozenset[int]:
    """Nodes 0, 3, ..., 3(t-1): pairwise separated by two nodes on the base cycle."""
    return frozenset(range(0, 3 * t, 3))


def build_chorded_cycle(t: int, chords: Iterable[tuple[int, int]] = ()) -> Graph:
    """
    Cycle on 3t nodes plus chords between nodes outside the designated set,
    which keeps every designated node at degree 2.

    Raises:
        ValidationError: if t < 2, a chord touches a designated node or
            duplicates a cycle edge
    """
    if t < 2:
        raise _topology_error("a chorded cycle needs t >= 2, got %(t)s", t=t)
    k = 3 * t
    base = _cycle_edges(list(range(k)))
    designated = chorded_cycle_designated(t)
    extra = set()
    for raw in chords:
        i, j = sorted((int(raw[0]), int(raw[1])))
        if i in designated or j in designated:
            raise _topology_error("chord (%(i)s, %(j)s) touches a designated node", i=i, j=j)
        if (i, j) in base or (i, j) in extra:
            raise _topology_error("chord (%(i)s, %(j)s) is already an edge", i=i, j=j)
        extra.add((i, j))
    return Graph.from_edges(k, base | extra)


@dataclass(frozen=True)
class Network:
    """A design: one non-singleton component on 0..k-1 followed by s singletons."""

    topology: str
    graph: Graph
    core: frozenset[int] = frozenset()
    periphery: frozenset[int] = frozenset()
    orphans: frozenset[int] = frozenset()
    middle_orphan: int | None = None
    designated: frozenset[int] = frozenset()
    singletons: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.topology not in TOPOLOGIES:
            raise _topology_error("unknown topology %(t)s", t=self.topology)

    @property
    def n(self) -> int:
        return self.graph.node_count

    @property
    def s(self) -> int:
        return len(self.singletons)

    @property
    def component(self) -> frozenset[int]:
        return frozenset(self.graph.nodes) - self.singletons

    def roles(self) -> Mapping[int, str]:
        """Node -> role name, for DOT colouring."""
        roles: dict[int, str] = {}
        for name, nodes in (
            ("core", self.core),
            ("periphery", self.periphery),
            ("orphan", self.orphans),
            ("designated", self.designated),
            ("singleton", self.singletons),
        ):
            roles.update(dict.fromkeys(nodes, name))
        if self.middle_orphan is not None:
            roles[self.middle_orphan] = "middle_orphan"
        return roles

    def component_graph(self) -> Graph:
        return induced_subgraph(self.graph, self.component).graph


def build_network(
    n: int, s: int, topology: str, chords: Iterable[tuple[int, int]] = ()
) -> Network:
    """
    Network on n nodes: the component of the given topology on 0..n-s-1 and
    singletons n-s..n-1.

    Raises:
        ValidationError: for an unknown topology or a size it cannot take
    """
    k = n - s
    if s < 0 or k < 0:
        raise _topology_error("invalid sizes n=%(n)s, s=%(s)s", n=n, s=s)
    singletons = frozenset(range(k, n))
    if topology == ALL_SINGLETONS:
        if k:
            raise _topology_error("all_singletons needs s = n")
        return Network(topology, Graph.empty(n), singletons=singletons)
    if topology == CYCLE:
        component = build_cycle(k)
        return Network(topology, _pad(component, s), singletons=singletons)
    if topology == CHORDED_CYCLE:
        if k % 3:
            raise _topology_error("a chorded cycle needs n - s divisible by 3")
        component = build_chorded_cycle(k // 3, chords)
        return Network(topology, _pad(component, s), designated=chorded_cycle_designated(k // 3), singletons=singletons)
    if topology in (MAXIMAL_CP_EVEN, MAXIMAL_CP_ODD):
        if (k % 2 == 0) != (topology == MAXIMAL_CP_EVEN):
            raise _topology_error("%(t)s does not fit a component of %(k)s nodes", t=topology, k=k)
        spec = maximal_cp_spec(k)
        return Network(
            topology,
            _pad(build_core_periphery(spec), s),
            core=spec.core,
            periphery=spec.periphery,
            orphans=spec.orphans,
            middle_orphan=spec.middle_orphan,
            singletons=singletons,
        )
    raise _topology_error("unknown topology %(t)s", t=topology)


def _pad(component: Graph, s: int) -> Graph:
    return component.disjoint_union(Graph.empty(s))
