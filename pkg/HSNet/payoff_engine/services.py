"""
The hider's payoff on a fixed network.

The matrix is stored from the hider's side: rows are hiding nodes h, columns
are inspected nodes k, and the seeker's payoff is the negated entry.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from django.core.exceptions import ValidationError

from graph_core.graphs import Graph, components, remove_node

from .utilities import UtilitySpec

Row = tuple[Fraction, ...]


@dataclass(frozen=True)
class PayoffMatrix:
    entries: tuple[Row, ...]
    exact: bool = True

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], exact: bool = True) -> "PayoffMatrix":
        entries = tuple(tuple(Fraction(v) for v in row) for row in rows)
        if not entries or not entries[0]:
            raise ValidationError("payoff matrix must be nonempty", code="dimension")
        if any(len(row) != len(entries[0]) for row in entries):
            raise ValidationError("payoff matrix rows differ in length", code="dimension")
        return cls(entries, exact)

    @property
    def row_count(self) -> int:
        return len(self.entries)

    @property
    def col_count(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def entry(self, h: int, k: int) -> Fraction:
        return self.entries[h][k]

    def column(self, k: int) -> Row:
        return tuple(row[k] for row in self.entries)

    def min_entry(self) -> Fraction:
        return min(min(row) for row in self.entries)

    def transform(self, scale: Fraction, shift: Fraction) -> "PayoffMatrix":
        return PayoffMatrix(tuple(tuple(scale * v + shift for v in row) for row in self.entries), self.exact)

    def seeker_entries(self) -> tuple[Row, ...]:
        return tuple(tuple(-v for v in row) for row in self.entries)


def residual_sizes(g: Graph) -> tuple[tuple[int, ...], ...]:
    """
    sizes[h][k] = 0 if the seeker at k captures the hider at h, otherwise the
    size of h's component in G - k. Independent of the utility.
    """
    n = g.node_count
    sizes = [[0] * n for _ in range(n)]
    for k in g.nodes:
        residual, mapping = remove_node(g, k)
        part = components(residual)
        captured = g.closed_neighborhood(k)
        for h in g.nodes:
            if h not in captured:
                sizes[h][k] = part.size_of(mapping[h])
    return tuple(tuple(row) for row in sizes)


def _payoff_from_size(size: int, u: UtilitySpec) -> Fraction:
    return -u.beta if size == 0 else u.f(size)


def hider_payoff(g: Graph, u: UtilitySpec, h: int, k: int) -> Fraction:
    """
    Payoff to the hider at h when the seeker inspects k.

    Raises:
        ValidationError: for invalid node ids
    """
    g.check_node(h)
    g.check_node(k)
    if h in g.closed_neighborhood(k):
        return -u.beta
    residual, mapping = remove_node(g, k)
    return u.f(components(residual).size_of(mapping[h]))


def payoff_matrix(g: Graph, u: UtilitySpec, sizes: Sequence[Sequence[int]] | None = None) -> PayoffMatrix:
    """Full hider payoff matrix; pass precomputed residual sizes to reuse them across utilities."""
    if g.node_count < 1:
        raise ValidationError("payoff matrix needs at least one node", code="dimension")
    sizes = sizes if sizes is not None else residual_sizes(g)
    cache = {size: _payoff_from_size(size, u) for size in range(g.node_count)}
    return PayoffMatrix(tuple(tuple(cache[size] for size in row) for row in sizes), u.exact)


def _probs(strategy) -> Sequence[Fraction]:
    return getattr(strategy, "probs", strategy)


def capture_probability(g: Graph, hider, seeker, within: Iterable[int] | None = None) -> Fraction:
    """
    Probability that the seeker captures the hider, optionally conditioned on
    the hider choosing a node of `within`.
    """
    x, y = _probs(hider), _probs(seeker)
    if len(x) != g.node_count or len(y) != g.node_count:
        raise ValidationError("strategy length does not match the graph", code="dimension")
    nodes = list(g.nodes) if within is None else sorted(set(within))
    mass = sum((x[h] for h in nodes), Fraction(0))
    if mass == 0:
        raise ValidationError("hider places no mass on the conditioning set", code="dimension")
    caught = sum(
        (x[h] * y[k] for h in nodes for k in g.closed_neighborhood(h)),
        Fraction(0),
    )
    return caught / mass
