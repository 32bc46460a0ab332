"""
Isomorphism-invariant keys for small graphs.

Nodes are first split by colour refinement (degree, then the multiset of
neighbour colours, until stable). Colour classes are ordered by their
signature, so any isomorphism maps class c onto class c. The key is the
lexicographically smallest sorted edge list over all labelings that respect
the class order.
"""
from __future__ import annotations

from itertools import permutations, product
from typing import Iterator

from django.conf import settings
from django.core.exceptions import ValidationError

from .graphs import Edge, Graph

CanonicalKey = tuple[int, tuple[Edge, ...]]


def refine_colors(g: Graph) -> list[int]:
    """Stable colouring; colour ids depend only on the isomorphism class."""
    colors = list(g.degrees())
    while True:
        signatures = [(colors[i], tuple(sorted(colors[j] for j in g.adjacency[i]))) for i in g.nodes]
        palette = {sig: c for c, sig in enumerate(sorted(set(signatures)))}
        refined = [palette[sig] for sig in signatures]
        if len(palette) == len(set(colors)):
            return refined
        colors = refined


def _class_orders(classes: list[list[int]]) -> Iterator[list[int]]:
    for choice in product(*(permutations(c) for c in classes)):
        yield [node for cls in choice for node in cls]


def canonical_form(g: Graph) -> CanonicalKey:
    """
    Raises:
        ValidationError: if g has more nodes than the enumeration bound
    """
    bound = settings.HSNET_ENUMERATION_BOUND
    if g.node_count > bound:
        raise ValidationError(
            "canonical_form supports at most %(bound)s nodes, got %(n)s",
            code="enumeration_bound",
            params={"bound": bound, "n": g.node_count},
        )
    if not g.edges:
        return (g.node_count, ())

    colors = refine_colors(g)
    classes = [[i for i in g.nodes if colors[i] == c] for c in sorted(set(colors))]
    best: tuple[Edge, ...] | None = None
    for order in _class_orders(classes):
        label = {node: p for p, node in enumerate(order)}
        key = tuple(sorted((min(label[i], label[j]), max(label[i], label[j])) for i, j in g.edges))
        if best is None or key < best:
            best = key
    return (g.node_count, best)


def canonical_graph(g: Graph) -> Graph:
    n, edges = canonical_form(g)
    return Graph(n, frozenset(edges))


def graph_from_key(key: CanonicalKey) -> Graph:
    n, edges = key
    return Graph(n, frozenset(edges))
