"""
All graphs on n nodes up to isomorphism.

Up to seven nodes the networkx graph atlas already lists every class once.
Eight nodes are built by attaching a new node to every subset of every
seven-node class and deduplicating on canonical keys; this takes minutes and
is only reached through the long verification runs.
"""
from __future__ import annotations

import logging
from functools import lru_cache
from itertools import combinations
from typing import Iterator

import networkx as nx
from django.conf import settings
from django.core.exceptions import ValidationError

from graph_core.canonical import CanonicalKey, canonical_form, graph_from_key
from graph_core.graphs import Graph

logger = logging.getLogger(__name__)

ATLAS_MAX_N = 7


def _check_bound(n: int) -> None:
    bound = settings.HSNET_ENUMERATION_BOUND
    if n < 0 or n > bound:
        raise ValidationError(
            "graph enumeration supports 0..%(bound)s nodes, got %(n)s",
            code="enumeration_bound",
            params={"bound": bound, "n": n},
        )


@lru_cache(maxsize=None)
def _atlas_keys(n: int) -> tuple[CanonicalKey, ...]:
    keys = {
        canonical_form(Graph.from_edges(n, a.edges()))
        for a in nx.graph_atlas_g()
        if a.number_of_nodes() == n
    }
    return tuple(sorted(keys))


@lru_cache(maxsize=None)
def _extended_keys(n: int) -> tuple[CanonicalKey, ...]:
    keys: set[CanonicalKey] = set()
    smaller = _keys(n - 1)
    for index, key in enumerate(smaller):
        base = graph_from_key(key)
        for size in range(n):
            for neighbours in combinations(range(n - 1), size):
                edges = set(base.edges) | {(j, n - 1) for j in neighbours}
                keys.add(canonical_form(Graph(n, frozenset(edges))))
        if index % 100 == 0:
            logger.debug("n=%d: extended %d/%d classes, %d found", n, index, len(smaller), len(keys))
    return tuple(sorted(keys))


def _keys(n: int) -> tuple[CanonicalKey, ...]:
    if n == 0:
        return ((0, ()),)
    return _atlas_keys(n) if n <= ATLAS_MAX_N else _extended_keys(n)


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """
    Every graph on n nodes exactly once, in canonical labeling and canonical-key order.

    Raises:
        ValidationError: if n exceeds HSNET_ENUMERATION_BOUND
    """
    _check_bound(n)
    for key in _keys(n):
        yield graph_from_key(key)


def graph_count(n: int) -> int:
    _check_bound(n)
    return len(_keys(n))
