"""
Tests for the constructed hider and seeker strategies.
"""
from fractions import Fraction

import pytest

from closed_form.formulas import mixing_kappa, mixing_lambda_R, mixing_lambda_S, mixing_mu, value_A
from designer.builders import (
    ALL_SINGLETONS,
    CYCLE,
    MAXIMAL_CP_EVEN,
    MAXIMAL_CP_ODD,
    build_maximal_cp,
    build_network,
)
from designer.strategies import hider_strategy, seeker_strategy
from graph_core.graphs import Graph
from matrix_game.services import MixedStrategy
from payoff_engine.services import capture_probability


@pytest.mark.unit
class TestSeekerStrategy:
    """Test seeker_strategy on the classified node sets."""

    def test_all_singletons(self, identity_u):
        """Test the empty network gets the uniform strategy."""
        assert seeker_strategy(Graph.empty(5), identity_u) == MixedStrategy.uniform(5)

    @pytest.mark.parametrize("k", [4, 7, 12])
    def test_cycle_is_uniform(self, k, square_u):
        """Test a cycle: every node in R and no GR leaves."""
        g = build_network(k, 0, CYCLE).graph
        assert seeker_strategy(g, square_u) == MixedStrategy.uniform(k)

    def test_maximal_cp_is_uniform_on_core(self, maximal_cp8, identity_u):
        """Test R is empty so the seeker stays on M."""
        sigma = seeker_strategy(maximal_cp8, identity_u.with_beta(2))
        assert sigma == MixedStrategy.uniform_on(8, range(4))

    def test_odd_cp_weights_middle_orphan(self, identity_u):
        """Test GR is the orphan path and all R mass sits on its middle node."""
        u = identity_u.with_beta(10)
        g = build_maximal_cp(7)
        sigma = seeker_strategy(g, u)
        lam_r = mixing_lambda_R(7, 2, 0, u, False)
        assert sigma[3] == lam_r
        assert sigma[0] == sigma[1] == (1 - lam_r) / 2
        assert sigma[2] == sigma[4] == sigma[5] == sigma[6] == 0

    def test_singleton_share(self, identity_u):
        """Test lambda_S on the singletons of a padded even network."""
        u = identity_u.with_beta(5)
        net = build_network(10, 2, MAXIMAL_CP_EVEN)
        sigma = seeker_strategy(net.graph, u)
        lam_s = mixing_lambda_S(10, 4, 2, u, True)
        assert sum(sigma[i] for i in net.singletons) == lam_s
        assert sum(sigma.probs) == 1

    def test_small_components_fall_back_to_uniform(self, identity_u):
        """Test a triangle plus a singleton."""
        g = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2)])
        assert seeker_strategy(g, identity_u) == MixedStrategy.uniform(4)


@pytest.mark.unit
class TestHiderStrategy:
    """Test hider_strategy on each topology."""

    def test_cycle_without_singletons(self, identity_u):
        """Test kappa = 1 gives the uniform strategy."""
        net = build_network(6, 0, CYCLE)
        assert hider_strategy(net, identity_u) == MixedStrategy.uniform(6)

    def test_even_cp_on_eight(self, identity_u):
        """Test 1/4 on each of the four leaves at beta 2."""
        net = build_network(8, 0, MAXIMAL_CP_EVEN)
        eta = hider_strategy(net, identity_u.with_beta(2))
        assert eta.probs == (0, 0, 0, 0) + (Fraction(1, 4),) * 4

    def test_odd_cp_split(self, identity_u):
        """Test kappa mu over the periphery and kappa (1 - mu) on the middle orphan."""
        u = identity_u.with_beta(10)
        net = build_network(9, 0, MAXIMAL_CP_ODD)
        eta = hider_strategy(net, u)
        mu = mixing_mu(9, 0, u)
        assert mu == Fraction(51, 71)
        assert all(eta[p] == mu / 3 for p in net.periphery)
        assert eta[net.middle_orphan] == 1 - mu

    def test_singletons_get_one_minus_kappa(self, square_u):
        """Test the singleton share and normalisation with a padded cycle."""
        u = square_u.with_beta(1)
        net = build_network(10, 2, CYCLE)
        eta = hider_strategy(net, u)
        kappa = mixing_kappa(10, 2, u, value_A(10, 0, 2, u))
        assert sum(eta[i] for i in net.singletons) == 1 - kappa
        assert sum(eta[i] for i in net.component) == kappa
        assert eta[8] == eta[9]

    def test_all_singletons(self, identity_u):
        """Test the uniform strategy on the empty network."""
        assert hider_strategy(build_network(3, 3, ALL_SINGLETONS), identity_u) == MixedStrategy.uniform(3)


@pytest.mark.unit
class TestCaptureRates:
    """Test capture probabilities under the constructed strategies."""

    @pytest.mark.parametrize("k", range(4, 13))
    def test_cycle(self, k, square_u):
        """Test capture probability 3/k on a k-cycle."""
        net = build_network(k, 0, CYCLE)
        hider, seeker = hider_strategy(net, square_u), seeker_strategy(net.graph, square_u)
        assert capture_probability(net.graph, hider, seeker) == Fraction(3, k)

    @pytest.mark.parametrize("k", [4, 6, 8, 10, 12])
    def test_even_maximal_cp(self, k, identity_u):
        """Test capture probability 2/k on an even maximal core-periphery network."""
        u = identity_u.with_beta(5)
        net = build_network(k, 0, MAXIMAL_CP_EVEN)
        hider, seeker = hider_strategy(net, u), seeker_strategy(net.graph, u)
        assert capture_probability(net.graph, hider, seeker) == Fraction(2, k)
