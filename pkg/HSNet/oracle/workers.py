"""
Per-process part of the exhaustive search.

Kept free of model imports so worker processes can import it without a
configured app registry.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from django.core.exceptions import ValidationError

from designer.strategies import seeker_strategy
from graph_core.canonical import CanonicalKey
from graph_core.graphs import Graph
from matrix_game.services import MixedStrategy, pure_minimax, row_payoffs, solve_zero_sum
from payoff_engine.services import PayoffMatrix, payoff_matrix
from payoff_engine.utilities import UtilitySpec


class CatalogueEntry(NamedTuple):
    key: CanonicalKey
    graph: Graph
    sizes: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ChunkResult:
    best_value: Fraction | None
    argmax: tuple[tuple[CanonicalKey, MixedStrategy], ...]
    solved: int
    pruned: int


def seeker_bound(g: Graph, matrix: PayoffMatrix, u: UtilitySpec) -> Fraction | None:
    """Hider's best reply against the closed-form seeker strategy; None where the closed forms do not apply."""
    try:
        sigma = seeker_strategy(g, u)
    except ValidationError:
        return None
    return max(row_payoffs(matrix, sigma.probs))


def upper_bound(g: Graph, matrix: PayoffMatrix, u: UtilitySpec) -> Fraction:
    bound = pure_minimax(matrix)
    sigma = seeker_bound(g, matrix, u)
    return bound if sigma is None else min(bound, sigma)


def solve_chunk(entries: Sequence[CatalogueEntry], u: UtilitySpec) -> ChunkResult:
    """
    Best LP value over the entries and every entry attaining it.

    Entries are solved in decreasing upper-bound order and the rest are
    skipped once a bound drops below the best value found; a bound equal to
    the best value is still solved so ties are never lost.
    """
    bounded = []
    for entry in entries:
        matrix = payoff_matrix(entry.graph, u, entry.sizes)
        bounded.append((upper_bound(entry.graph, matrix, u), entry.key, matrix))
    bounded.sort(key=lambda item: (-item[0], item[1]))

    best: Fraction | None = None
    argmax: list[tuple[CanonicalKey, MixedStrategy]] = []
    solved = 0
    for position, (bound, key, matrix) in enumerate(bounded):
        if best is not None and bound < best:
            return ChunkResult(best, tuple(argmax), solved, len(bounded) - position)
        solution = solve_zero_sum(matrix)
        solved += 1
        if best is None or solution.value > best:
            best, argmax = solution.value, [(key, solution.row_strategy)]
        elif solution.value == best:
            argmax.append((key, solution.row_strategy))
    return ChunkResult(best, tuple(argmax), solved, 0)


def merge_chunks(results: Sequence[ChunkResult]) -> ChunkResult:
    """Max of the best values, union of the argmax sets in key order."""
    values = [r.best_value for r in results if r.best_value is not None]
    if not values:
        return ChunkResult(None, (), 0, 0)
    best = max(values)
    argmax = sorted((item for r in results if r.best_value == best for item in r.argmax), key=lambda item: item[0])
    return ChunkResult(
        best,
        tuple(argmax),
        sum(r.solved for r in results),
        sum(r.pruned for r in results),
    )
