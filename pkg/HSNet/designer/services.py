"""
Optimal network design for given (n, f, beta).

Every design is checked against the exact LP solver before it is returned:
the solved value must equal the closed-form prediction and both constructed
strategies must have zero regret.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from closed_form.formulas import bound_Q, check_singleton_count, optimal_singletons, threshold_T, value_B
from graph_core.graphs import Graph
from matrix_game.services import MixedStrategy, best_response_gap, solve_zero_sum
from payoff_engine.services import PayoffMatrix, payoff_matrix
from payoff_engine.utilities import UtilitySpec

from .builders import ALL_SINGLETONS, CYCLE, MAXIMAL_CP_EVEN, MAXIMAL_CP_ODD, Network, build_network
from .strategies import DESIGN_M, hider_strategy, seeker_strategy

logger = logging.getLogger(__name__)


class DesignVerificationError(AssertionError):
    """The LP solver disagrees with a constructed design."""


@dataclass(frozen=True)
class DesignResult:
    s_star: int
    network: Network
    hider: MixedStrategy
    seeker: MixedStrategy
    predicted_value: Fraction
    exact: bool = True

    @property
    def graph(self) -> Graph:
        return self.network.graph

    @property
    def topology(self) -> str:
        return self.network.topology


def design_topology(n: int, s: int, u: UtilitySpec) -> str:
    """cycle when T(n, s) >= beta, the maximal core-periphery network otherwise."""
    check_singleton_count(n, s)
    if s == n:
        return ALL_SINGLETONS
    if threshold_T(n, s, u) >= u.beta:
        return CYCLE
    return MAXIMAL_CP_EVEN if (n - s) % 2 == 0 else MAXIMAL_CP_ODD


def predicted_seeker_bound(n: int, s: int, topology: str, u: UtilitySpec) -> Fraction:
    """Seeker payoff certified by the constructed strategies; equals Qbar(n, s) for the optimal topology."""
    if topology == ALL_SINGLETONS:
        return value_B(n, u)
    return bound_Q(n, DESIGN_M[topology](n - s), s, u)


def verify_design(result: DesignResult, u: UtilitySpec, matrix: PayoffMatrix | None = None) -> None:
    """
    Raises:
        DesignVerificationError: if the LP value differs from the prediction
            or either strategy has positive regret
    """
    matrix = matrix or payoff_matrix(result.graph, u)
    value = solve_zero_sum(matrix).value
    if value != result.predicted_value:
        raise DesignVerificationError(
            f"{result.topology} on n={result.graph.node_count}, s={result.s_star}: "
            f"LP value {value} != predicted {result.predicted_value}"
        )
    gap = best_response_gap(matrix, result.hider, result.seeker)
    if gap != (0, 0):
        raise DesignVerificationError(f"{result.topology}: strategies have regret {gap}")


def design_for(
    n: int,
    s: int,
    u: UtilitySpec,
    topology: str | None = None,
    chords: Iterable[tuple[int, int]] = (),
    verify: bool = True,
) -> DesignResult:
    """
    The optimal design with exactly s singletons, or the given topology with
    its constructed strategies.

    Raises:
        ValidationError: for s outside 0..n-4 and n, or an unknown topology
        DesignVerificationError: if `verify` and the LP check fails
    """
    check_singleton_count(n, s)
    topology = topology or design_topology(n, s, u)
    network = build_network(n, s, topology, chords)
    hider = hider_strategy(network, u)
    seeker = seeker_strategy(network.graph, u)
    predicted = -predicted_seeker_bound(n, s, topology, u)
    result = DesignResult(s, network, hider, seeker, predicted, u.exact)
    if verify:
        verify_design(result, u)
    return result


def design_optimal(n: int, u: UtilitySpec, verify: bool = True) -> DesignResult:
    """
    The design at the smallest optimal singleton count; the hider's value is
    minus the minimum of Qbar(n, s) over s.
    """
    winners, _ = optimal_singletons(n, u)
    s = min(winners)
    result = design_for(n, s, u, verify=verify)
    logger.info("n=%d %s: s*=%d %s, hider value %s", n, u.label, s, result.topology, result.predicted_value)
    return result

