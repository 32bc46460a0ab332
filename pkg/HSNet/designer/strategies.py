"""
Equilibrium strategies on designed networks.

The seeker's strategy is defined for any network from its node classes; the
hider's strategy needs the roles recorded by the builders.
"""
from __future__ import annotations

from fractions import Fraction

from closed_form.formulas import mixing_kappa, mixing_lambda_R, mixing_lambda_S, mixing_mu, value_A
from graph_core.classification import classify
from graph_core.graphs import Graph
from matrix_game.services import MixedStrategy
from payoff_engine.utilities import UtilitySpec

from .builders import ALL_SINGLETONS, CHORDED_CYCLE, CYCLE, MAXIMAL_CP_EVEN, MAXIMAL_CP_ODD, Network


def _spread(weights: dict[int, Fraction], nodes, total: Fraction) -> None:
    nodes = list(nodes)
    if not nodes or total == 0:
        return
    share = total / len(nodes)
    for node in nodes:
        weights[node] = weights.get(node, Fraction(0)) + share


def seeker_strategy(g: Graph, u: UtilitySpec) -> MixedStrategy:
    """
    lambda_S on the singletons, then lambda_R on R(G) and the rest on M(G).

    Inside R(G) a node that is not a leaf of GR gets (leaf neighbours + 1)/r
    and a node of a two-node component of GR gets 1/r. Networks with fewer
    than four non-isolated nodes fall outside the closed forms and get the
    uniform strategy.
    """
    n = g.node_count
    part = classify(g)
    s, m, r = part.s, part.m, part.r
    if s == n or n - s < 4:
        return MixedStrategy.uniform(n)

    r_empty = r == 0
    lam_s = mixing_lambda_S(n, m, s, u, r_empty)
    lam_r = mixing_lambda_R(n, m, s, u, r_empty)

    weights: dict[int, Fraction] = {}
    _spread(weights, part.singletons, lam_s)
    _spread(weights, part.m_nodes, (1 - lam_s) * (1 - lam_r))
    if r:
        r_mass = (1 - lam_s) * lam_r
        gr_leaves = part.gr_leaves()
        leaf_counts = part.gr_leaf_counts()
        for node in part.r_nodes:
            if node not in gr_leaves:
                share = Fraction(leaf_counts[node] + 1, r)
            elif node in part.d_gr:
                share = Fraction(1, r)
            else:
                continue
            weights[node] = weights.get(node, Fraction(0)) + r_mass * share
    return MixedStrategy.from_weights(n, weights)


DESIGN_M = {
    CYCLE: lambda k: 0,
    CHORDED_CYCLE: lambda k: 0,
    MAXIMAL_CP_EVEN: lambda k: k // 2,
    MAXIMAL_CP_ODD: lambda k: (k - 3) // 2,
}


def hider_strategy(network: Network, u: UtilitySpec) -> MixedStrategy:
    """
    Mass kappa on the component and 1 - kappa spread over the singletons.

    Inside the component the hider is uniform over:

        cycle            every node
        chorded_cycle    the designated degree-2 nodes
        maximal_cp_even  the periphery

    The odd maximal network splits kappa as mu over the periphery and 1 - mu
    on the middle orphan.
    """
    n, s = network.n, network.s
    if network.topology == ALL_SINGLETONS:
        return MixedStrategy.uniform(n)

    k = n - s
    kappa = mixing_kappa(n, s, u, value_A(n, DESIGN_M[network.topology](k), s, u))
    weights: dict[int, Fraction] = {}
    _spread(weights, network.singletons, 1 - kappa)
    if network.topology == CYCLE:
        _spread(weights, network.component, kappa)
    elif network.topology == CHORDED_CYCLE:
        _spread(weights, network.designated, kappa)
    elif network.topology == MAXIMAL_CP_EVEN:
        _spread(weights, network.periphery, kappa)
    else:
        mu = mixing_mu(n, s, u)
        _spread(weights, network.periphery, kappa * mu)
        weights[network.middle_orphan] = kappa * (1 - mu)
    return MixedStrategy.from_weights(n, weights)
